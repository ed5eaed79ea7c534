#pragma once

#include <optional>
#include <vector>

#include "rcurv/graph.hpp"
#include "rcurv/intersection_array.hpp"
#include "rcurv/lp.hpp"
#include "rcurv/rational.hpp"

namespace rcurv {

struct CurvatureValue {
  Rational value;
  // Optimal f on the LP support (the support ordering of the LipschitzLP).
  VertexSet support;
  std::vector<Rational> optimizer;

  Rational at(Vertex v) const;
};

// Non-normalised Ollivier curvature as a linear program over the values of f
// on B1(x) u B1(y). The objective Delta f(x) - Delta f(y) only reads f on this
// support, and any f that is 1-Lipschitz for the ambient distance on the
// support extends to a globally 1-Lipschitz function by
//   f(z) = min_w (f(w) + d(z, w)),
// so restricting to the support loses nothing. That is why the pair
// constraints use global distances for every support pair, not just edges.
struct LipschitzLP {
  Vertex x;
  Vertex y;
  int distance;  // d(x, y)
  VertexSet support;
  // f(x) = 0 fixes the additive gauge; f(y) = d(x, y).
  // Objective coefficient per support vertex (before dividing by d).
  std::vector<Rational> objective;
  struct PairConstraint {
    Vertex u;
    Vertex v;
    int bound;  // f(u) - f(v) <= bound
  };
  std::vector<PairConstraint> constraints;  // every ordered support pair
};

LipschitzLP build_lipschitz_lp(const Graph& g, Vertex x, Vertex y);

// Drops pair constraints implied by a chain through another support vertex
// on a geodesic, then hands the rest to the exact simplex.
CurvatureValue solve_lipschitz_lp(const Graph& g, const LipschitzLP& lp,
                                  PivotRule rule = PivotRule::kBland);

CurvatureValue edge_curvature(const Graph& g, Vertex x, Vertex y);
CurvatureValue long_range_curvature(const Graph& g, Vertex x, Vertex y);

struct EdgeCurvatures {
  std::vector<Rational> per_edge;  // aligned with g.edges()
  Rational minimum;
  bool is_constant = true;
  Edge min_edge{};
  std::optional<Edge> other_edge;  // an edge with a different value, if any
};

EdgeCurvatures min_edge_curvature(const Graph& g);

// Exhaustive oracle, independent of the simplex. Up to kLiteralSubsetLimit
// candidate bases it literally solves every square subsystem of tight pair
// constraints; beyond that it scans the integer box containing every vertex
// of the difference-constraint polytope. Guarded by the support size.
Rational brute_force_curvature_oracle(const Graph& g, Vertex x, Vertex y,
                                      std::size_t max_support = 10);

// 1 + b_0 - b_1 (b_1 read as 0 for diameter one).
Rational curvature_from_intersection_array(const IntersectionArray& ia);

inline constexpr std::size_t kLiteralSubsetLimit = 200'000;

// Checks f against every ordered support pair and recomputes the objective.
bool optimizer_is_feasible(const Graph& g, const LipschitzLP& lp, const CurvatureValue& value);

// f extended by z -> min_w (f(w) + d(z, w)) is 1-Lipschitz on every edge and
// agrees with f on the support.
bool min_extension_is_lipschitz(const Graph& g, const CurvatureValue& value);

}  // namespace rcurv
