#include "rcurv/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "rcurv/errors.hpp"

namespace rcurv {
namespace {

std::vector<int> bfs_from(const std::vector<std::vector<Vertex>>& adjacency, Vertex s) {
  std::vector<int> dist(adjacency.size(), -1);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

void require_connected(const Graph& g) {
  if (!g.connected()) {
    throw DisconnectedSubgraphError("metric query on a disconnected graph");
  }
}

}  // namespace

Graph make_graph_unchecked(std::size_t n, std::span<const Edge> edges, bool require_connected) {
  if (n == 0) throw InvalidParameter("graph needs at least one vertex");
  if (n > 4096) throw InvalidParameter("graph too large");
  Graph g;
  g.adjacency_.assign(n, {});
  g.edge_index_.assign(n * n, -1);
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidParameter("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                             " references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw SelfLoopError(e.u);
    Edge norm{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (g.edge_index_[norm.u * n + norm.v] >= 0) throw DuplicateEdgeError(e.u, e.v);
    g.edge_index_[norm.u * n + norm.v] = 0;
    normalized.push_back(norm);
  }
  std::sort(normalized.begin(), normalized.end());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const Edge& e = normalized[i];
    g.edge_index_[e.u * n + e.v] = static_cast<std::int32_t>(i);
    g.edge_index_[e.v * n + e.u] = static_cast<std::int32_t>(i);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(normalized);

  auto reach = bfs_from(g.adjacency_, 0);
  auto missing = std::find(reach.begin(), reach.end(), -1);
  g.connected_ = missing == reach.end();
  if (!g.connected_ && require_connected) {
    throw DisconnectedError(0, static_cast<std::size_t>(missing - reach.begin()));
  }
  return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return make_graph_unchecked(n, edges, true);
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::is_regular() const {
  for (const auto& nb : adjacency_) {
    if (nb.size() != adjacency_.front().size()) return false;
  }
  return true;
}

const DistanceMatrix& Graph::distances() const {
  require_connected(*this);
  std::call_once(cache_->once, [this] {
    const std::size_t n = vertex_count();
    std::vector<int> all(n * n);
    for (Vertex s = 0; s < n; ++s) {
      auto row = bfs_from(adjacency_, s);
      std::copy(row.begin(), row.end(), all.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    cache_->matrix = DistanceMatrix(n, std::move(all));
  });
  return cache_->matrix;
}

int Graph::diameter() const {
  const auto& d = distances();
  int best = 0;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (int x : d.row(u)) best = std::max(best, x);
  }
  return best;
}

VertexSet sphere(const Graph& g, Vertex x, int r) {
  VertexSet out;
  auto row = g.distances().row(x);
  for (Vertex v = 0; v < row.size(); ++v) {
    if (row[v] == r) out.push_back(v);
  }
  return out;
}

VertexSet ball(const Graph& g, Vertex x, int r) {
  VertexSet out;
  auto row = g.distances().row(x);
  for (Vertex v = 0; v < row.size(); ++v) {
    if (row[v] <= r) out.push_back(v);
  }
  return out;
}

SidePartition side_partition(const Graph& g, Vertex x, Vertex y) {
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  const auto& d = g.distances();
  SidePartition p;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    int dx = d(z, x);
    int dy = d(z, y);
    if (dx < dy) {
      p.side_x.push_back(z);
    } else if (dy < dx) {
      p.side_y.push_back(z);
    } else {
      p.middle.push_back(z);
    }
  }
  return p;
}

Rational effective_diameter(const Graph& g) {
  const auto& d = g.distances();
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (int x : d.row(u)) total += x;
  }
  auto n = static_cast<std::int64_t>(g.vertex_count());
  return Rational(total, n * n);
}

Rational max_mean_distance(const Graph& g) {
  const auto& d = g.distances();
  std::int64_t best = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto row = d.row(u);
    best = std::max<std::int64_t>(best, std::accumulate(row.begin(), row.end(), std::int64_t{0}));
  }
  return Rational(best, static_cast<std::int64_t>(g.vertex_count()));
}

LocalConnectivity local_connectivity(const Graph& g) {
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    auto nb = g.neighbors(x);
    if (nb.size() <= 1) continue;
    std::vector<char> seen(nb.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (!seen[j] && g.adjacent(nb[i], nb[j])) {
          seen[j] = 1;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    if (reached != nb.size()) return {false, x};
  }
  return {};
}

bool is_locally_connected(const Graph& g) { return local_connectivity(g).locally_connected; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InvalidParameter("induced subgraph of an empty vertex set");
  std::vector<Vertex> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::int64_t> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.vertex_count()) throw InvalidParameter("vertex out of range");
    local[members[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v])});
    }
  }
  return {make_graph_unchecked(members.size(), edges, false), std::move(members)};
}

bool is_convex_subset(const Graph& g, std::span<const Vertex> s) {
  const auto& d = g.distances();
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vertex u = s[i];
      Vertex v = s[j];
      for (Vertex z = 0; z < g.vertex_count(); ++z) {
        if (!in[z] && d(u, z) + d(z, v) == d(u, v)) return false;
      }
    }
  }
  return true;
}

bool is_isometric_subset(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return true;
  auto sub = induced_subgraph(g, s);
  if (!sub.graph.connected()) return false;
  const auto& d = g.distances();
  const auto& ds = sub.graph.distances();
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex j = i + 1; j < sub.to_parent.size(); ++j) {
      if (ds(i, j) != d(sub.to_parent[i], sub.to_parent[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> sorted_degree_sequence(const Graph& g) {
  std::vector<Vertex> degs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) degs.push_back(static_cast<Vertex>(g.degree(v)));
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  auto next_token = [&](std::istringstream& ls, std::size_t& value, const char* what) {
    ls >> std::ws;
    if (ls.eof()) throw ParseError(std::string("expected ") + what, line_no, line.size() + 1);
    auto col = static_cast<std::size_t>(ls.tellg()) + 1;
    std::string tok;
    ls >> tok;
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(std::string("expected non-negative integer ") + what + ", got '" + tok +
                           "'",
                       line_no, col);
    }
    value = std::stoull(tok);
  };
  auto expect_end = [&](std::istringstream& ls) {
    ls >> std::ws;
    if (!ls.eof()) {
      throw ParseError("unexpected trailing text", line_no,
                       static_cast<std::size_t>(ls.tellg()) + 1);
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      next_token(ls, n, "vertex count");
      next_token(ls, m, "edge count");
      expect_end(ls);
      if (n == 0) throw ParseError("vertex count must be positive", line_no, 1);
      have_header = true;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    next_token(ls, u, "vertex");
    next_token(ls, v, "vertex");
    expect_end(ls);
    if (u >= n || v >= n) {
      throw ParseError("vertex out of range 0.." + std::to_string(n - 1), line_no, 1);
    }
    if (edges.size() == m) throw ParseError("more edges than declared", line_no, 1);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw ParseError("missing 'n m' header", line_no + 1, 1);
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no + 1, 1);
  }
  return build_graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace rcurv
