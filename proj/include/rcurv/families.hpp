#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rcurv/graph.hpp"

namespace rcurv {

// Generators for the graph families of the classification, plus the small
// test-corpus families. Vertex labels are lexicographic over the natural
// combinatorial objects (subsets, strings, pairs) so outputs are reproducible.

// K_{k x 2}: 2k vertices, i ~ j unless {i, j} = {2t, 2t+1}.
Graph cocktail_party(int k);
// k-subsets of {0..n-1}, adjacent when they share k-1 elements.
Graph johnson(int n, int k);
// Even-weight binary strings of length n, adjacent at Hamming distance 2.
Graph halved_cube(int n);
// Non-collinear pairs among the 27 lines of a cubic surface (16-regular).
Graph schlafli();
// Two copies of the 2-subsets of {0..7}; same sign adjacent when meeting in one
// point, opposite sign adjacent when disjoint.
Graph gosset();
Graph hypercube(int n);
Graph complete_graph(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph hamming(int m, int q);
Graph petersen();

// Vertex (u1, u2) gets label u1 * |V2| + u2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

struct FamilySpec {
  enum class Kind {
    CocktailParty,
    Johnson,
    HalvedCube,
    Hypercube,
    Hamming,
    Schlafli,
    Gosset,
    Complete,
    Cycle,
    CompleteBipartite,
    Path,
    Petersen,
    Product,
  };
  Kind kind;
  std::vector<int> params;
  std::vector<FamilySpec> factors;  // Product only

  Graph build() const;
  // Round-trips through parse_family.
  std::string to_string() const;
};

// Family expression DSL:
//   K n | CP k | J n k | HQ n | Q n | H m q | C n | KB a b | P n
//   | schlafli | gosset | petersen | ( expr x expr [x expr ...] )
// Keywords are case-insensitive and whitespace-separated.
FamilySpec parse_family(const std::string& text);
Graph build_family(const std::string& text);

}  // namespace rcurv
