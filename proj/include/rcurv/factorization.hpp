#pragma once

#include <vector>

#include "rcurv/graph.hpp"

namespace rcurv {

// Components of the relation on edges: (x,y) ~ (x',y') iff
//   d(x,x') + d(y,y') != d(x,y') + d(y,x'),  or
//   x = x' and N(y) n N(y') = {x}, after possibly swapping the ends of
//   either edge.
// g is a Cartesian product of two non-trivial graphs iff there is more than
// one component.
struct EdgeRelationPartition {
  std::vector<Edge> edges;     // g.edges()
  std::vector<int> component;  // per edge, numbered by first occurrence
  int count = 0;
};

EdgeRelationPartition edge_relation_components(const Graph& g);

// Throws TrivialGraphError on a single vertex.
bool is_prime(const Graph& g);

// Prime factors whose product is isomorphic to g. Each split is verified by
// rebuilding the product; throws FactorizationFailed if no grouping of the
// relation components verifies.
std::vector<Graph> factorize(const Graph& g);

}  // namespace rcurv
