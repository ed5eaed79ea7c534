#include "rcurv/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/factorization.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"
#include "rcurv/ollivier.hpp"
#include "rcurv/reflective.hpp"
#include "rcurv/spectral.hpp"

namespace rcurv {
namespace {

struct Candidate {
  std::string name;
  std::function<Graph()> build;
};

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// In precedence order, filtered by vertex count and degree.
std::vector<Candidate> candidates(std::size_t n, std::size_t deg) {
  const auto N = static_cast<long long>(n);
  const auto D = static_cast<long long>(deg);
  std::vector<Candidate> out;
  auto name = [](const char* f, std::initializer_list<int> ps) {
    std::string s = std::string(f) + "(";
    bool first = true;
    for (int p : ps) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + ")";
  };
  if (N % 2 == 0 && N >= 4 && D == N - 2) {
    const int k = static_cast<int>(N / 2);
    out.push_back({name("CP", {k}), [k] { return cocktail_party(k); }});
  }
  for (int a = 4; binomial(a, 2) <= N; ++a) {
    for (int k = 2; 2 * k <= a; ++k) {
      if (binomial(a, k) == N && static_cast<long long>(k) * (a - k) == D) {
        out.push_back({name("J", {a, k}), [a, k] { return johnson(a, k); }});
      }
    }
  }
  for (int a = 4; a < 62 && (1LL << (a - 1)) <= N; ++a) {
    if ((1LL << (a - 1)) == N && binomial(a, 2) == D) {
      out.push_back({name("HQ", {a}), [a] { return halved_cube(a); }});
    }
  }
  if (N == 27 && D == 16) out.push_back({"Schläfli", [] { return schlafli(); }});
  if (N == 56 && D == 27) out.push_back({"Gosset", [] { return gosset(); }});
  for (int q = 3; q * q <= N; ++q) {
    long long p = q * q;
    for (int m = 2; p <= N; ++m, p *= q) {
      if (p == N && static_cast<long long>(m) * (q - 1) == D) {
        out.push_back({name("H", {m, q}), [m, q] { return hamming(m, q); }});
      }
    }
  }
  for (int a = 2; a < 62 && (1LL << a) <= N; ++a) {
    if ((1LL << a) == N && a == D) out.push_back({"Q" + std::to_string(a), [a] { return hypercube(a); }});
  }
  if (D == N - 1) {
    const int k = static_cast<int>(N);
    out.push_back({"K" + std::to_string(k), [k] { return complete_graph(k); }});
  }
  return out;
}

std::vector<double> fingerprint(const Graph& g) { return adjacency_spectrum(g).eigenvalues; }

bool same_fingerprint(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  }
  return true;
}

std::string edge_text(const Edge& e) { return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v); }

Verdict iff(bool a, bool b, const std::string& witness) {
  if (a == b) return {};
  return {false, witness};
}

nlohmann::json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", integer_json(r.numerator())}, {"den", integer_json(r.denominator())}};
}

}  // namespace

std::string identify_family(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return "K1";
  const std::size_t deg = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != deg) return "unrecognized";
  }
  auto cands = candidates(n, deg);
  if (cands.empty()) return "unrecognized";
  const auto fp = fingerprint(g);
  for (const Candidate& c : cands) {
    Graph h = c.build();
    if (h.edge_count() != g.edge_count() || !same_fingerprint(fp, fingerprint(h))) continue;
    if (auto phi = are_isomorphic(g, h); phi && is_isomorphism(g, h, *phi)) return c.name;
  }
  return "unrecognized";
}

bool is_list_family(const std::string& name) {
  if (name == "Schläfli" || name == "Gosset") return true;
  for (const char* prefix : {"CP(", "J(", "HQ("}) {
    if (name.rfind(prefix, 0) == 0) return true;
  }
  return name.size() > 1 && name[0] == 'K' && std::isdigit(static_cast<unsigned char>(name[1]));
}

bool ClassificationReport::consistent() const {
  return std::all_of(theorem_verdicts.begin(), theorem_verdicts.end(),
                     [](const auto& kv) { return kv.second.pass; });
}

std::string ClassificationReport::to_json() const {
  nlohmann::json j;
  j["graph_summary"] = {{"n", graph_summary.n},
                        {"m", graph_summary.m},
                        {"max_degree", graph_summary.max_degree},
                        {"regular", graph_summary.regular},
                        {"locally_connected", graph_summary.locally_connected}};
  j["kappa_min"] = rational_json(kappa_min);
  j["kappa_constant"] = kappa_constant;
  j["diam_eff"] = rational_json(diam_eff);
  j["eff_bm_sharp"] = eff_bm_sharp;
  j["reflective"] = reflective;
  j["lambda"] = lambda;
  j["lichnerowicz_sharp"] = lichnerowicz_sharp;
  if (distance_regular) {
    j["distance_regular"] = {{"b", distance_regular->b}, {"c", distance_regular->c}};
  } else {
    j["distance_regular"] = nullptr;
  }
  j["prime_factors"] = nlohmann::json::array();
  for (const PrimeFactor& f : prime_factors) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
    j["prime_factors"].push_back({{"edges", edges},
                                  {"n", f.n},
                                  {"family", f.family},
                                  {"kappa", rational_json(f.kappa)},
                                  {"kappa_constant", f.kappa_constant}});
  }
  j["theorem_verdicts"] = nlohmann::json::object();
  for (const auto& [name, v] : theorem_verdicts) {
    j["theorem_verdicts"][name] = {{"pass", v.pass},
                                   {"witness", v.pass ? nlohmann::json(nullptr) : nlohmann::json(v.witness)}};
  }
  return j.dump(2);
}

ClassificationReport classify(const Graph& g, double tol) {
  if (g.vertex_count() < 2) throw TrivialGraphError("classification needs an edge");
  ClassificationReport r;
  const std::size_t n = g.vertex_count();
  r.graph_summary.n = n;
  r.graph_summary.m = g.edge_count();
  std::size_t min_degree = n;
  for (Vertex v = 0; v < n; ++v) {
    r.graph_summary.max_degree = std::max(r.graph_summary.max_degree, g.degree(v));
    min_degree = std::min(min_degree, g.degree(v));
  }
  r.graph_summary.regular = min_degree == r.graph_summary.max_degree;
  const LocalConnectivity lc = local_connectivity(g);
  r.graph_summary.locally_connected = lc.locally_connected;

  const EdgeCurvatures curv = min_edge_curvature(g);
  r.kappa_min = curv.minimum;
  r.kappa_constant = curv.is_constant;
  r.diam_eff = effective_diameter(g);
  const Rational max_deg(static_cast<std::int64_t>(r.graph_summary.max_degree));
  const Rational product = r.diam_eff * r.kappa_min;
  r.eff_bm_sharp = r.kappa_min > Rational(0) && product == max_deg;

  const ReflectiveVerdict refl = is_reflective(g);
  r.reflective = refl.reflective;

  const LichnerowiczReport lich = is_lichnerowicz_sharp(g, r.kappa_min, tol);
  r.lambda = lich.lambda;
  r.lichnerowicz_sharp = lich.sharp;

  const DistanceRegularity dr = distance_regularity(g);
  r.distance_regular = dr.array;

  const std::vector<Graph> factors = factorize(g);
  for (const Graph& f : factors) {
    PrimeFactor pf;
    pf.edges = f.edges();
    pf.n = f.vertex_count();
    pf.family = identify_family(f);
    const EdgeCurvatures fc = factors.size() == 1 ? curv : min_edge_curvature(f);
    pf.kappa = fc.minimum;
    pf.kappa_constant = fc.is_constant;
    r.prime_factors.push_back(std::move(pf));
  }

  // Witnesses, one per predicate, used by whichever equivalence fails.
  std::ostringstream sharp_w;
  sharp_w << "diam_eff * kappa_min = " << product << ", max degree " << r.graph_summary.max_degree;
  const std::string refl_w = refl.counterexample
                                 ? edge_text(*refl.counterexample) + " has no reflection (" + to_string(refl.failed) + ")"
                                 : "every edge has a reflection";
  std::string const_w = "curvature constant " + r.kappa_min.to_string();
  if (curv.other_edge) {
    const_w = edge_text(curv.min_edge) + " and " + edge_text(*curv.other_edge) + " differ in curvature";
  }
  std::string list_w = "every prime factor is on the list";
  std::size_t off_list = r.prime_factors.size();
  for (std::size_t i = 0; i < r.prime_factors.size(); ++i) {
    if (!is_list_family(r.prime_factors[i].family)) {
      off_list = i;
      list_w = "factor " + std::to_string(i) + " (" + std::to_string(r.prime_factors[i].n) + " vertices) is " +
               r.prime_factors[i].family;
      break;
    }
  }
  const bool factors_on_list = off_list == r.prime_factors.size();
  bool factors_share_kappa = true;
  std::string share_w = list_w;
  for (std::size_t i = 0; i < r.prime_factors.size(); ++i) {
    const PrimeFactor& f = r.prime_factors[i];
    if (!f.kappa_constant || f.kappa != r.prime_factors.front().kappa) {
      factors_share_kappa = false;
      share_w = "factor " + std::to_string(i) + " has curvature " + f.kappa.to_string() + " against " +
                r.prime_factors.front().kappa.to_string();
      break;
    }
  }
  const bool list_product = factors_on_list && factors_share_kappa;
  const std::string list_product_w = factors_on_list ? share_w : list_w;

  auto& v = r.theorem_verdicts;
  {
    const bool rhs = r.reflective && r.kappa_constant;
    std::string w = sharp_w.str();
    if (r.eff_bm_sharp) w = r.reflective ? const_w : refl_w;
    v["E1 sharp iff reflective with constant curvature"] = iff(r.eff_bm_sharp, rhs, w);
    v["E1 sharp iff list product with common curvature"] =
        iff(r.eff_bm_sharp, list_product, r.eff_bm_sharp ? list_product_w : sharp_w.str());
  }
  v["E3 reflective iff prime factors on list"] = iff(r.reflective, factors_on_list, r.reflective ? list_w : refl_w);
  if (r.graph_summary.locally_connected) {
    const bool drl = r.distance_regular.has_value() && r.lichnerowicz_sharp;
    std::string drl_w = "lambda " + std::to_string(r.lambda) + " against kappa_min " + r.kappa_min.to_string();
    if (dr.counterexample) {
      drl_w = "pair " + std::to_string(dr.counterexample->first) + "," + std::to_string(dr.counterexample->second) +
              " breaks distance regularity";
    }
    const bool named = r.prime_factors.size() == 1 && is_list_family(r.prime_factors[0].family);
    v["E2 sharp iff reflective"] = iff(r.eff_bm_sharp, r.reflective, r.eff_bm_sharp ? refl_w : sharp_w.str());
    v["E2 reflective iff distance regular and Lichnerowicz sharp"] =
        iff(r.reflective, drl, r.reflective ? drl_w : refl_w);
    v["E2 distance regular and Lichnerowicz sharp iff on list"] = iff(drl, named, drl ? list_w : drl_w);
    v["E2 locally connected implies prime"] =
        r.prime_factors.size() == 1
            ? Verdict{}
            : Verdict{false, std::to_string(r.prime_factors.size()) + " factors"};
  }
  if (r.kappa_min > Rational(0)) {
    v["bound effective diameter"] =
        product <= max_deg ? Verdict{} : Verdict{false, sharp_w.str()};
    v["bound Lichnerowicz"] =
        lich.inequality_holds ? Verdict{}
                              : Verdict{false, "lambda " + std::to_string(r.lambda) + " below kappa_min " +
                                                   r.kappa_min.to_string()};
  }
  return r;
}

}  // namespace rcurv
