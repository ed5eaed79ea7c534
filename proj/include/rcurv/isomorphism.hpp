#pragma once

#include <optional>
#include <vector>

#include "rcurv/graph.hpp"

namespace rcurv {

// Returns a bijection phi with u ~ v in g1 iff phi[u] ~ phi[v] in g2, or
// nullopt. Colour refinement on both graphs in lockstep, then
// individualisation with backtracking; deterministic for fixed inputs.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g1, const Graph& g2);

// Edge-by-edge check of a claimed isomorphism.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping);

// Relabels g so that vertex v becomes permutation[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& permutation);

}  // namespace rcurv
