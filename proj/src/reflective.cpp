#include "rcurv/reflective.hpp"

#include <deque>
#include <functional>
#include <sstream>

#include "rcurv/errors.hpp"
#include "rcurv/ollivier.hpp"

namespace rcurv {
namespace {

std::optional<Vertex> automorphism_violation(const Graph& g, std::span<const Vertex> map) {
  const std::size_t n = g.vertex_count();
  if (map.size() != n) return Vertex{0};
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (map[v] >= n || hit[map[v]]) return v;
    hit[map[v]] = 1;
  }
  // Bijective and edge-preserving on a finite graph implies non-edges map to
  // non-edges.
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(map[e.u], map[e.v])) return e.u;
  }
  return std::nullopt;
}

std::optional<Vertex> involution_violation(std::span<const Vertex> map) {
  for (Vertex v = 0; v < map.size(); ++v) {
    if (map[v] >= map.size() || map[map[v]] != v) return v;
  }
  return std::nullopt;
}

std::optional<Vertex> cross_edge_violation(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map) {
  SidePartition p = side_partition(g, x, y);
  for (Vertex a : p.side_x) {
    for (Vertex b : g.neighbors(a)) {
      if (contains(p.side_y, b) && map[a] != b) return a;
    }
    if (!contains(p.side_y, map[a]) || !g.adjacent(a, map[a])) return a;
  }
  return std::nullopt;
}

std::optional<Vertex> middle_violation(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map) {
  for (Vertex z : side_partition(g, x, y).middle) {
    if (map[z] != z) return z;
  }
  return std::nullopt;
}

ReflectionResult failure(ReflectionAxiom a, std::optional<Vertex> witness) {
  ReflectionResult r;
  r.failed = a;
  r.witness = witness;
  return r;
}

}  // namespace

std::string to_string(ReflectionAxiom a) {
  switch (a) {
    case ReflectionAxiom::kNone: return "none";
    case ReflectionAxiom::kCrossMatching: return "cross-matching";
    case ReflectionAxiom::kAutomorphism: return "automorphism";
    case ReflectionAxiom::kInvolution: return "involution";
    case ReflectionAxiom::kMapsXToY: return "maps-x-to-y";
    case ReflectionAxiom::kCrossEdges: return "cross-edges";
    case ReflectionAxiom::kFixesMiddle: return "fixes-middle";
    case ReflectionAxiom::kOrientation: return "orientation";
  }
  return "unknown";
}

ReflectionResult candidate_reflection(const Graph& g, Vertex x, Vertex y) {
  SidePartition p = side_partition(g, x, y);
  std::vector<Vertex> map(g.vertex_count());
  for (Vertex v = 0; v < map.size(); ++v) map[v] = v;
  auto unique_across = [&](Vertex a, const VertexSet& other) -> std::optional<Vertex> {
    std::optional<Vertex> found;
    for (Vertex b : g.neighbors(a)) {
      if (!contains(other, b)) continue;
      if (found) return std::nullopt;
      found = b;
    }
    return found;
  };
  for (Vertex a : p.side_x) {
    auto b = unique_across(a, p.side_y);
    if (!b) return failure(ReflectionAxiom::kCrossMatching, a);
    map[a] = *b;
  }
  for (Vertex b : p.side_y) {
    auto a = unique_across(b, p.side_x);
    if (!a) return failure(ReflectionAxiom::kCrossMatching, b);
    if (map[*a] != b) return failure(ReflectionAxiom::kCrossMatching, b);
    map[b] = *a;
  }
  ReflectionResult r;
  r.reflection = Reflection{x, y, std::move(map)};
  return r;
}

ReflectionResult find_reflection(const Graph& g, Vertex x, Vertex y) {
  ReflectionResult r = candidate_reflection(g, x, y);
  if (!r.reflection) return r;
  const auto& map = r.reflection->mapping;
  if (auto w = automorphism_violation(g, map)) return failure(ReflectionAxiom::kAutomorphism, w);
  if (auto w = involution_violation(map)) return failure(ReflectionAxiom::kInvolution, w);
  if (map[x] != y) return failure(ReflectionAxiom::kMapsXToY, x);
  if (auto w = cross_edge_violation(g, x, y, map)) return failure(ReflectionAxiom::kCrossEdges, w);
  if (auto w = middle_violation(g, x, y, map)) return failure(ReflectionAxiom::kFixesMiddle, w);
  return r;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> map) {
  return !automorphism_violation(g, map);
}

bool is_involution(std::span<const Vertex> map) { return !involution_violation(map); }

bool cross_edges_match(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map) {
  return !cross_edge_violation(g, x, y, map);
}

bool fixes_middle(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map) {
  return !middle_violation(g, x, y, map);
}

ReflectiveVerdict is_reflective(const Graph& g) {
  ReflectiveVerdict v;
  for (const Edge& e : g.edges()) {
    ReflectionResult fwd = find_reflection(g, e.u, e.v);
    ReflectionResult back = find_reflection(g, e.v, e.u);
    ReflectionAxiom failed = fwd.failed != ReflectionAxiom::kNone ? fwd.failed : back.failed;
    if (fwd.reflection && back.reflection && fwd.reflection->mapping != back.reflection->mapping) {
      failed = ReflectionAxiom::kOrientation;
    }
    if (fwd.reflection.has_value() != back.reflection.has_value()) failed = ReflectionAxiom::kOrientation;
    if (failed != ReflectionAxiom::kNone) {
      v.reflective = false;
      v.counterexample = e;
      v.failed = failed;
      return v;
    }
  }
  return v;
}

ReflectionTable::ReflectionTable(Graph g) : g_(std::move(g)) {
  const std::size_t n = g_.vertex_count();
  maps_.reserve(g_.edge_count() * n);
  for (const Edge& e : g_.edges()) {
    ReflectionResult r = find_reflection(g_, e.u, e.v);
    if (!r.reflection) {
      throw NotReflectiveError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                               " has no reflection (" + to_string(r.failed) + ")");
    }
    maps_.insert(maps_.end(), r.reflection->mapping.begin(), r.reflection->mapping.end());
  }
}

std::span<const Vertex> ReflectionTable::phi(Vertex x, Vertex y) const {
  const std::int32_t id = g_.edge_id(x, y);
  if (id < 0) throw NotAdjacentError(x, y);
  const std::size_t n = g_.vertex_count();
  return {maps_.data() + static_cast<std::size_t>(id) * n, n};
}

std::string one_line_notation(std::span<const Vertex> map) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < map.size(); ++i) out << (i ? " " : "") << map[i];
  out << ']';
  return out.str();
}

bool are_parallel(const Graph& g, Vertex x, Vertex y, Vertex x2, Vertex y2) {
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  if (!g.adjacent(x2, y2)) throw NotAdjacentError(x2, y2);
  const auto& d = g.distances();
  return d(x2, x) < d(x2, y) && d(y2, y) < d(y2, x);
}

bool parallel_gradient_identity(const Graph& g, Vertex x, Vertex y, Vertex x2, Vertex y2) {
  if (!are_parallel(g, x, y, x2, y2)) throw NotParallelError("edges are not parallel");
  const auto& d = g.distances();
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    if (d(x, z) - d(y, z) != d(x2, z) - d(y2, z)) return false;
  }
  SidePartition a = side_partition(g, x, y);
  SidePartition b = side_partition(g, x2, y2);
  return a.side_x == b.side_x && a.side_y == b.side_y;
}

std::pair<Vertex, Vertex> parallel_in_ball(const ReflectionTable& t, Vertex x, Vertex y, Vertex z) {
  const Graph& g = t.graph();
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  const auto& d = g.distances();
  const Vertex x0 = x;
  const Vertex y0 = y;
  auto certified = [&](Vertex a, Vertex b) {
    if (!are_parallel(g, x0, y0, a, b) || d(a, z) > 1 || d(b, z) > 1) {
      throw InternalError("parallel_in_ball produced an invalid edge");
    }
    return std::pair{a, b};
  };
  while (true) {
    if (d(z, x) < d(z, y)) return certified(z, t.apply(x, y, z));
    if (d(z, y) < d(z, x)) return certified(t.apply(x, y, z), z);
    const int n = d(x, z);
    Vertex p = 0;
    for (Vertex w : g.neighbors(z)) {
      if (d(w, x) == n - 1) {
        p = w;
        break;
      }
    }
    if (d(p, y) == n) {
      return certified(p, t.apply(x, y, p));
    }
    // p is equidistant: reflect x across p ~ z to get a parallel copy of the
    // edge one step closer to z.
    const Vertex x2 = t.apply(p, z, x);
    const Vertex y2 = t.apply(x, y, x2);
    if (d(x2, z) != n - 1 || !are_parallel(g, x, y, x2, y2)) {
      throw InternalError("reflection step in parallel_in_ball failed");
    }
    x = x2;
    y = y2;
  }
}

std::optional<std::pair<Vertex, Vertex>> parallel_in_ball_scan(const Graph& g, Vertex x, Vertex y, Vertex z) {
  for (Vertex a : ball(g, z, 1)) {
    for (Vertex b : g.neighbors(a)) {
      if (g.distance(b, z) <= 1 && are_parallel(g, x, y, a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

OrbitCertificate pair_orbit_certificate(const ReflectionTable& t) {
  const Graph& g = t.graph();
  const auto& d = g.distances();
  const std::size_t n = g.vertex_count();
  OrbitCertificate cert;
  cert.diameter = g.diameter();
  std::vector<char> seen(n * n, 0);
  std::deque<std::pair<Vertex, Vertex>> queue;
  bool uniform = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (seen[u * n + v]) continue;
      ++cert.orbit_count;
      seen[u * n + v] = 1;
      queue.emplace_back(u, v);
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        if (d(a, b) != d(u, v)) uniform = false;
        for (const Edge& e : g.edges()) {
          auto phi = t.phi(e.u, e.v);
          const Vertex pa = phi[a];
          const Vertex pb = phi[b];
          if (!seen[pa * n + pb]) {
            seen[pa * n + pb] = 1;
            queue.emplace_back(pa, pb);
          }
        }
      }
    }
  }
  if (!uniform) throw InternalError("a reflection failed to preserve distance");
  cert.distance_transitive = cert.orbit_count == static_cast<std::size_t>(cert.diameter) + 1;
  return cert;
}

CheckResult matching_structure_check(const Graph& g, Vertex x, Vertex y, const Rational& k) {
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  if (!k.is_integer() || k < Rational(2)) {
    return {false, "K = " + k.to_string() + " is not an integer >= 2"};
  }
  const auto middle_target = static_cast<std::size_t>(k.numerator()) - 2;
  SidePartition p = side_partition(g, x, y);
  for (Vertex a : p.side_x) {
    std::size_t across = 0;
    std::size_t middle = 0;
    for (Vertex b : g.neighbors(a)) {
      if (contains(p.side_y, b)) ++across;
      if (contains(p.middle, b)) ++middle;
    }
    if (across != 1) return {false, "vertex " + std::to_string(a) + " has " + std::to_string(across) + " cross-neighbours"};
    if (middle != middle_target) {
      return {false, "vertex " + std::to_string(a) + " has " + std::to_string(middle) + " middle neighbours"};
    }
  }
  return {};
}

CheckResult distance_eigenfunction_check(const Graph& g, Vertex x, const Rational& k) {
  const auto& d = g.distances();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::int64_t lap = 0;
    for (Vertex w : g.neighbors(v)) lap += d(x, w) - d(x, v);
    if (Rational(lap) != Rational(static_cast<std::int64_t>(g.degree(x))) - k * Rational(d(x, v))) {
      return {false, "fails at vertex " + std::to_string(v)};
    }
  }
  return {};
}

std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& left, std::size_t right_count) {
  std::vector<std::size_t> owner(right_count, SIZE_MAX);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t r : left[i]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (owner[r] == SIZE_MAX || augment(owner[r])) {
        owner[r] = i;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    visited.assign(right_count, 0);
    if (augment(i)) ++size;
  }
  return size;
}

CheckResult triangle_matching_check(const Graph& g, Vertex x, Vertex y, const Rational& kappa) {
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  const auto triangles = static_cast<std::int64_t>(set_intersection(nx, ny).size());
  if (Rational(triangles) < kappa - Rational(2)) {
    return {false, std::to_string(triangles) + " triangles, curvature " + kappa.to_string()};
  }
  if (Rational(triangles) != kappa - Rational(2)) return {};
  VertexSet bx = ball(g, x, 1);
  VertexSet by = ball(g, y, 1);
  VertexSet only_x = set_difference(bx, by);
  VertexSet only_y = set_difference(by, bx);
  if (only_x.size() != only_y.size()) return {false, "sides of the matching differ in size"};
  std::vector<std::vector<std::size_t>> adj(only_x.size());
  for (std::size_t i = 0; i < only_x.size(); ++i) {
    for (std::size_t j = 0; j < only_y.size(); ++j) {
      if (g.adjacent(only_x[i], only_y[j])) adj[i].push_back(j);
    }
  }
  if (maximum_matching(adj, only_y.size()) != only_x.size()) return {false, "no perfect matching"};
  return {};
}

CheckResult triangle_matching_check(const Graph& g, Vertex x, Vertex y) {
  return triangle_matching_check(g, x, y, edge_curvature(g, x, y).value);
}

CheckResult vxy_check(const ReflectionTable& t, Vertex x, Vertex y) {
  const Graph& g = t.graph();
  VertexSet side = side_partition(g, x, y).side_x;
  if (!is_convex_subset(g, side)) return {false, "side of edge is not convex"};
  auto sub = induced_subgraph(g, side);
  if (!sub.graph.connected()) return {false, "side of edge induces a disconnected graph"};
  auto verdict = is_reflective(sub.graph);
  if (!verdict.reflective) return {false, "side of edge is not reflective"};
  return {};
}

CheckResult neighbourhood_isometry_check(const Graph& g) {
  const auto& d = g.distances();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexSet s1 = sphere(g, v, 1);
    if (!induced_subgraph(g, s1).graph.connected()) continue;
    if (!is_isometric_subset(g, s1)) return {false, "S1(" + std::to_string(v) + ") is not isometric"};
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      VertexSet cut = set_intersection(s1, sphere(g, w, d(v, w) + 1));
      if (!is_isometric_subset(g, cut)) {
        return {false, "S1(" + std::to_string(v) + ") cut by a sphere around " + std::to_string(w) +
                           " is not isometric"};
      }
    }
  }
  return {};
}

CheckResult vxy_convex_reflective_check(const ReflectionTable& t, Vertex x, Vertex y) {
  CheckResult r = vxy_check(t, x, y);
  if (!r.ok) return r;
  return neighbourhood_isometry_check(t.graph());
}

}  // namespace rcurv
