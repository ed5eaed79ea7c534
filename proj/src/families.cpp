#include "rcurv/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "rcurv/errors.hpp"

namespace rcurv {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

std::vector<std::uint32_t> k_subsets(int n, int k) {
  // bitmasks in lexicographic order of the sorted element lists
  std::vector<std::uint32_t> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

template <typename Pred>
Graph graph_from_predicate(std::size_t n, Pred adjacent) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

// Checks that the neighbour counts of y into the spheres around x depend only
// on d(x, y), and that they match the expected intersection array.
void validate_intersection_array(const Graph& g, std::size_t n, const std::vector<int>& b,
                                 const std::vector<int>& c, const char* name) {
  auto fail = [&](const std::string& why) {
    throw InternalError(std::string(name) + " generator failed validation: " + why);
  };
  if (g.vertex_count() != n) fail("vertex count");
  if (g.diameter() != static_cast<int>(b.size())) fail("diameter");
  const auto& d = g.distances();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      int k = d(x, y);
      int up = 0;
      int down = 0;
      for (Vertex w : g.neighbors(y)) {
        if (d(x, w) == k + 1) ++up;
        if (d(x, w) == k - 1) ++down;
      }
      int want_up = k < static_cast<int>(b.size()) ? b[static_cast<std::size_t>(k)] : 0;
      int want_down = k > 0 ? c[static_cast<std::size_t>(k - 1)] : 0;
      if (up != want_up || down != want_down) fail("intersection numbers");
    }
  }
}

}  // namespace

Graph cocktail_party(int k) {
  require(k >= 2, "cocktail_party needs k >= 2");
  return graph_from_predicate(static_cast<std::size_t>(2 * k),
                              [](Vertex u, Vertex v) { return u / 2 != v / 2; });
}

Graph johnson(int n, int k) {
  require(k >= 1 && k <= n - 1 && n <= 24, "johnson needs 1 <= k <= n-1 (n <= 24)");
  std::size_t count = 1;
  for (int i = 1; i <= k; ++i) count = count * static_cast<std::size_t>(n - k + i) / i;
  require(count <= 4096, "johnson graph too large");
  auto sets = k_subsets(n, k);
  return graph_from_predicate(sets.size(), [&](Vertex u, Vertex v) {
    return std::popcount(sets[u] & sets[v]) == k - 1;
  });
}

Graph halved_cube(int n) {
  require(n >= 2 && n <= 13, "halved_cube needs 2 <= n <= 13");
  std::vector<std::uint32_t> words;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (std::popcount(w) % 2 == 0) words.push_back(w);
  }
  return graph_from_predicate(words.size(), [&](Vertex u, Vertex v) {
    return std::popcount(words[u] ^ words[v]) == 2;
  });
}

Graph schlafli() {
  // Lines a_i (0..5), b_i (6..11), c_ij (12..26). Two lines are joined when
  // they are skew, i.e. the complement of the incidence rule below.
  struct Line {
    char kind;
    int i;
    int j;
  };
  std::vector<Line> lines;
  for (int i = 0; i < 6; ++i) lines.push_back({'a', i, -1});
  for (int i = 0; i < 6; ++i) lines.push_back({'b', i, -1});
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) lines.push_back({'c', i, j});
  }
  auto meet = [](const Line& p, const Line& q) {
    if (p.kind > q.kind) return false;  // callers pass ordered kinds
    if (p.kind == 'a' && q.kind == 'b') return p.i != q.i;
    if ((p.kind == 'a' || p.kind == 'b') && q.kind == 'c') return p.i == q.i || p.i == q.j;
    if (p.kind == 'c' && q.kind == 'c') {
      return p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j;
    }
    return false;
  };
  Graph g = graph_from_predicate(lines.size(), [&](Vertex u, Vertex v) {
    const Line& p = lines[u];
    const Line& q = lines[v];
    bool intersect = p.kind <= q.kind ? meet(p, q) : meet(q, p);
    return !intersect;
  });
  validate_intersection_array(g, 27, {16, 5}, {1, 8}, "schlafli");
  return g;
}

Graph gosset() {
  auto pairs = k_subsets(8, 2);
  const std::size_t half = pairs.size();
  Graph g = graph_from_predicate(2 * half, [&](Vertex u, Vertex v) {
    bool same_sign = (u < half) == (v < half);
    std::uint32_t a = pairs[u % half];
    std::uint32_t b = pairs[v % half];
    return same_sign ? std::popcount(a & b) == 1 : (a & b) == 0;
  });
  validate_intersection_array(g, 56, {27, 10, 1}, {1, 10, 27}, "gosset");
  return g;
}

Graph hamming(int m, int q) {
  require(m >= 1 && q >= 2, "hamming needs m >= 1 and q >= 2");
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) {
    n *= static_cast<std::size_t>(q);
    require(n <= 4096, "hamming graph too large");
  }
  auto differing_digits = [&](Vertex u, Vertex v) {
    int diff = 0;
    for (int i = 0; i < m; ++i) {
      if (u % q != v % q) ++diff;
      u /= static_cast<Vertex>(q);
      v /= static_cast<Vertex>(q);
    }
    return diff;
  };
  return graph_from_predicate(n, [&](Vertex u, Vertex v) { return differing_digits(u, v) == 1; });
}

Graph hypercube(int n) {
  require(n >= 1 && n <= 12, "hypercube needs 1 <= n <= 12");
  return hamming(n, 2);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete_graph needs n >= 1");
  return graph_from_predicate(static_cast<std::size_t>(n), [](Vertex, Vertex) { return true; });
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  return graph_from_predicate(static_cast<std::size_t>(n), [n](Vertex u, Vertex v) {
    return v == u + 1 || (u == 0 && v == static_cast<Vertex>(n - 1));
  });
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  return graph_from_predicate(static_cast<std::size_t>(n),
                              [](Vertex u, Vertex v) { return v == u + 1; });
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  auto side = [a](Vertex v) { return v < static_cast<Vertex>(a); };
  return graph_from_predicate(static_cast<std::size_t>(a + b),
                              [&](Vertex u, Vertex v) { return side(u) != side(v); });
}

Graph petersen() {
  // Kneser graph K(5,2): disjoint 2-subsets.
  auto sets = k_subsets(5, 2);
  return graph_from_predicate(sets.size(),
                              [&](Vertex u, Vertex v) { return (sets[u] & sets[v]) == 0; });
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto n1 = static_cast<Vertex>(g1.vertex_count());
  const auto n2 = static_cast<Vertex>(g2.vertex_count());
  require(static_cast<std::size_t>(n1) * n2 <= 4096, "cartesian product too large");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a) {
    for (const Edge& e : g2.edges()) edges.push_back({a * n2 + e.u, a * n2 + e.v});
  }
  for (const Edge& e : g1.edges()) {
    for (Vertex b = 0; b < n2; ++b) edges.push_back({e.u * n2 + b, e.v * n2 + b});
  }
  return build_graph(static_cast<std::size_t>(n1) * n2, edges);
}

// ---------------------------------------------------------------------------
// Family DSL

Graph FamilySpec::build() const {
  auto p = [this](std::size_t i) { return params.at(i); };
  switch (kind) {
    case Kind::CocktailParty: return cocktail_party(p(0));
    case Kind::Johnson: return johnson(p(0), p(1));
    case Kind::HalvedCube: return halved_cube(p(0));
    case Kind::Hypercube: return hypercube(p(0));
    case Kind::Hamming: return hamming(p(0), p(1));
    case Kind::Schlafli: return schlafli();
    case Kind::Gosset: return gosset();
    case Kind::Complete: return complete_graph(p(0));
    case Kind::Cycle: return cycle(p(0));
    case Kind::CompleteBipartite: return complete_bipartite(p(0), p(1));
    case Kind::Path: return path(p(0));
    case Kind::Petersen: return petersen();
    case Kind::Product: {
      Graph g = factors.at(0).build();
      for (std::size_t i = 1; i < factors.size(); ++i) g = cartesian_product(g, factors[i].build());
      return g;
    }
  }
  throw InternalError("unknown family kind");
}

namespace {

struct KeywordInfo {
  const char* keyword;
  FamilySpec::Kind kind;
  int arity;
};

constexpr KeywordInfo kKeywords[] = {
    {"k", FamilySpec::Kind::Complete, 1},
    {"cp", FamilySpec::Kind::CocktailParty, 1},
    {"j", FamilySpec::Kind::Johnson, 2},
    {"hq", FamilySpec::Kind::HalvedCube, 1},
    {"q", FamilySpec::Kind::Hypercube, 1},
    {"h", FamilySpec::Kind::Hamming, 2},
    {"c", FamilySpec::Kind::Cycle, 1},
    {"kb", FamilySpec::Kind::CompleteBipartite, 2},
    {"p", FamilySpec::Kind::Path, 1},
    {"schlafli", FamilySpec::Kind::Schlafli, 0},
    {"gosset", FamilySpec::Kind::Gosset, 0},
    {"petersen", FamilySpec::Kind::Petersen, 0},
};

struct Token {
  std::string text;
  std::size_t column;
};

class FamilyParser {
 public:
  explicit FamilyParser(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '(' || text[i] == ')') {
        tokens_.push_back({std::string(1, text[i]), i + 1});
        ++i;
      } else {
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '(' && text[i] != ')') {
          ++i;
        }
        std::string word = text.substr(start, i - start);
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        tokens_.push_back({word, start + 1});
      }
    }
    end_column_ = text.size() + 1;
  }

  FamilySpec parse() {
    FamilySpec spec = expr();
    if (pos_ < tokens_.size()) error("unexpected '" + tokens_[pos_].text + "'");
    return spec;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    std::size_t col = pos_ < tokens_.size() ? tokens_[pos_].column : end_column_;
    throw ParseError(what, 1, col);
  }

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  FamilySpec expr() {
    const Token* t = peek();
    if (!t) error("expected a family expression");
    if (t->text == "(") {
      ++pos_;
      FamilySpec product{FamilySpec::Kind::Product, {}, {}};
      product.factors.push_back(expr());
      while (peek() && peek()->text == "x") {
        ++pos_;
        product.factors.push_back(expr());
      }
      if (!peek() || peek()->text != ")") error("expected 'x' or ')'");
      ++pos_;
      if (product.factors.size() < 2) error("product needs at least two factors");
      return product;
    }
    for (const auto& kw : kKeywords) {
      if (t->text != kw.keyword) continue;
      ++pos_;
      FamilySpec spec{kw.kind, {}, {}};
      for (int i = 0; i < kw.arity; ++i) spec.params.push_back(integer());
      return spec;
    }
    error("unknown family '" + t->text + "'");
  }

  int integer() {
    const Token* t = peek();
    if (!t) error("expected an integer parameter");
    if (t->text.empty() || t->text.size() > 6 ||
        t->text.find_first_not_of("0123456789") != std::string::npos) {
      error("expected an integer parameter, got '" + t->text + "'");
    }
    ++pos_;
    return std::stoi(t->text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_column_ = 1;
};

}  // namespace

std::string FamilySpec::to_string() const {
  if (kind == Kind::Product) {
    std::string out = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += (i ? " x " : " ") + factors[i].to_string();
    }
    return out + " )";
  }
  for (const auto& kw : kKeywords) {
    if (kw.kind != kind) continue;
    std::string out = kw.keyword;
    if (kw.arity > 0) std::transform(out.begin(), out.end(), out.begin(), ::toupper);
    for (int p : params) out += " " + std::to_string(p);
    return out;
  }
  return "?";
}

FamilySpec parse_family(const std::string& text) { return FamilyParser(text).parse(); }

Graph build_family(const std::string& text) { return parse_family(text).build(); }

}  // namespace rcurv
