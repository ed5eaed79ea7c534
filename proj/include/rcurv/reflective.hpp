#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcurv/graph.hpp"
#include "rcurv/rational.hpp"

namespace rcurv {

// An automorphism phi_xy of g that swaps the two sides of the edge x ~ y
// through the unique cross-edge matching and fixes the equidistant vertices.
struct Reflection {
  Vertex x;
  Vertex y;
  std::vector<Vertex> mapping;
};

enum class ReflectionAxiom {
  kNone,
  kCrossMatching,  // no forced candidate: some side vertex lacks a unique cross-neighbour
  kAutomorphism,
  kInvolution,
  kMapsXToY,
  kCrossEdges,
  kFixesMiddle,
  kOrientation,  // phi_xy and phi_yx disagree
};

std::string to_string(ReflectionAxiom a);

struct ReflectionResult {
  std::optional<Reflection> reflection;
  ReflectionAxiom failed = ReflectionAxiom::kNone;
  std::optional<Vertex> witness;
};

// Each side vertex is sent to its unique neighbour across; the middle stays.
// No validation beyond the matching being unique and mutual.
ReflectionResult candidate_reflection(const Graph& g, Vertex x, Vertex y);

// The forced candidate, checked against every axiom.
ReflectionResult find_reflection(const Graph& g, Vertex x, Vertex y);

// The axioms, each on its own, for any permutation.
bool is_automorphism(const Graph& g, std::span<const Vertex> map);
bool is_involution(std::span<const Vertex> map);
bool cross_edges_match(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map);
bool fixes_middle(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> map);

struct ReflectiveVerdict {
  bool reflective = true;
  std::optional<Edge> counterexample;
  ReflectionAxiom failed = ReflectionAxiom::kNone;
};

// Tries both orientations of every edge and requires them to agree.
ReflectiveVerdict is_reflective(const Graph& g);

// One reflection per edge, indexed like g.edges(). phi(x, y) == phi(y, x).
class ReflectionTable {
 public:
  // Throws NotReflectiveError naming the first failing edge.
  explicit ReflectionTable(Graph g);

  const Graph& graph() const { return g_; }
  std::span<const Vertex> phi(Vertex x, Vertex y) const;
  Vertex apply(Vertex x, Vertex y, Vertex v) const { return phi(x, y)[v]; }

 private:
  Graph g_;
  std::vector<Vertex> maps_;  // edge_count * n
};

// "[p(0) p(1) ...]"
std::string one_line_notation(std::span<const Vertex> map);

// (x, y) || (x2, y2): x2 on the x side and y2 on the y side. Ordered.
bool are_parallel(const Graph& g, Vertex x, Vertex y, Vertex x2, Vertex y2);

// d(x,z) - d(y,z) = d(x2,z) - d(y2,z) for every z, plus equality of the two
// side sets. Throws NotParallelError unless the edges are parallel.
bool parallel_gradient_identity(const Graph& g, Vertex x, Vertex y, Vertex x2, Vertex y2);

// A parallel copy of (x, y) with both ends in B1(z), built by walking z's
// geodesic toward x and reflecting; every step is checked.
std::pair<Vertex, Vertex> parallel_in_ball(const ReflectionTable& t, Vertex x, Vertex y, Vertex z);

// First ordered edge (lexicographic) in B1(z) parallel to (x, y), by scanning.
std::optional<std::pair<Vertex, Vertex>> parallel_in_ball_scan(const Graph& g, Vertex x, Vertex y, Vertex z);

struct OrbitCertificate {
  bool distance_transitive = false;
  std::size_t orbit_count = 0;
  int diameter = 0;
};

// Orbits of ordered pairs under the group generated by all reflections,
// compared with the distance classes.
OrbitCertificate pair_orbit_certificate(const ReflectionTable& t);

struct CheckResult {
  bool ok = true;
  std::string note;  // why it failed
};

// Every x' on the x side has exactly one neighbour on the y side and exactly
// K - 2 neighbours in the middle. K must be an integer >= 2.
CheckResult matching_structure_check(const Graph& g, Vertex x, Vertex y, const Rational& k);

// Laplacian of d(x, .) equals Deg(x) - K d(x, .) everywhere, exactly.
CheckResult distance_eigenfunction_check(const Graph& g, Vertex x, const Rational& k);

// At least kappa - 2 triangles on the edge; at equality, a perfect matching
// between B1(x) \ B1(y) and B1(y) \ B1(x) along edges.
CheckResult triangle_matching_check(const Graph& g, Vertex x, Vertex y, const Rational& kappa);
CheckResult triangle_matching_check(const Graph& g, Vertex x, Vertex y);

// Maximum bipartite matching by augmenting paths; left[i] lists right indices.
std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& left, std::size_t right_count);

// The x side is convex and induces a reflective graph.
CheckResult vxy_check(const ReflectionTable& t, Vertex x, Vertex y);

// For every v whose neighbourhood is connected: S1(v) is isometric, and so is
// S1(v) n S_n(v') for every v' with d(v, v') = n - 1.
CheckResult neighbourhood_isometry_check(const Graph& g);

// Both of the above; the second part does not depend on the edge.
CheckResult vxy_convex_reflective_check(const ReflectionTable& t, Vertex x, Vertex y);

}  // namespace rcurv
