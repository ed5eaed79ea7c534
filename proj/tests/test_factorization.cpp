#include "doctest.h"

#include <random>

#include "rcurv/errors.hpp"
#include "rcurv/factorization.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"
#include "rcurv/reflective.hpp"

using namespace rcurv;

namespace {

// Multiset equality up to isomorphism.
bool same_factors(std::vector<Graph> a, std::vector<Graph> b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const Graph& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && are_isomorphic(x, b[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("edge relation components") {
  CHECK(edge_relation_components(complete_graph(2)).count == 1);
  auto c4 = edge_relation_components(cycle(4));
  CHECK(c4.count == 2);
  // C4 edges in order: 0-1, 0-3, 1-2, 2-3; opposite edges share a class.
  CHECK(c4.component[0] == c4.component[3]);
  CHECK(c4.component[1] == c4.component[2]);
  CHECK(edge_relation_components(gosset()).count == 1);
  CHECK(edge_relation_components(hypercube(3)).count == 3);
}

TEST_CASE("the shared-vertex clause matters") {
  // K_{1,2}: the two edges are not related by distances but share the centre
  // as the only common neighbour of the leaves.
  Graph p3 = path(3);
  CHECK(edge_relation_components(p3).count == 1);
  CHECK(is_prime(p3));
  CHECK(is_prime(complete_bipartite(1, 3)));
}

TEST_CASE("primality") {
  CHECK(is_prime(schlafli()));
  CHECK(is_prime(gosset()));
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) CHECK(is_prime(johnson(n, k)));
  CHECK_FALSE(is_prime(hypercube(3)));
  CHECK_FALSE(is_prime(cartesian_product(johnson(4, 2), complete_graph(2))));
  CHECK(is_prime(cycle(5)));
  CHECK(is_prime(petersen()));
  CHECK_THROWS_AS(is_prime(complete_graph(1)), TrivialGraphError);
}

TEST_CASE("factorize examples") {
  auto q3 = factorize(hypercube(3));
  CHECK(q3.size() == 3);
  CHECK(same_factors(q3, {complete_graph(2), complete_graph(2), complete_graph(2)}));
  Graph oct = cocktail_party(3);
  auto jc = factorize(cartesian_product(johnson(4, 2), oct));
  CHECK(same_factors(jc, {oct, oct}));
  auto s = factorize(schlafli());
  REQUIRE(s.size() == 1);
  CHECK(are_isomorphic(s[0], schlafli()));
  CHECK(same_factors(factorize(hamming(3, 3)), {complete_graph(3), complete_graph(3), complete_graph(3)}));
  CHECK(same_factors(factorize(cycle(4)), {complete_graph(2), complete_graph(2)}));
}

TEST_CASE("factorization round trips") {
  std::vector<Graph> primes{complete_graph(2), complete_graph(3), path(3),       cycle(5),
                            petersen(),        cocktail_party(3), johnson(5, 2), complete_bipartite(2, 3)};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t count = 2 + rng() % 2;
    std::vector<Graph> chosen;
    for (std::size_t i = 0; i < count; ++i) chosen.push_back(primes[rng() % primes.size()]);
    if (count == 3 && chosen[0].vertex_count() * chosen[1].vertex_count() * chosen[2].vertex_count() > 400) continue;
    Graph g = chosen[0];
    for (std::size_t i = 1; i < count; ++i) g = cartesian_product(g, chosen[i]);
    auto factors = factorize(g);
    CHECK(same_factors(factors, chosen));
    std::size_t vertices = 1;
    std::size_t degree = 0;
    Rational diam;
    for (const Graph& f : factors) {
      vertices *= f.vertex_count();
      degree += f.max_degree();
      diam += effective_diameter(f);
    }
    CHECK(vertices == g.vertex_count());
    CHECK(degree == g.max_degree());
    CHECK(diam == effective_diameter(g));
  }
}

TEST_CASE("reflectiveness passes through products") {
  std::vector<Graph> graphs{complete_graph(2), cocktail_party(3), johnson(5, 2), cycle(5), path(3), complete_bipartite(2, 3)};
  for (const Graph& a : graphs) {
    for (const Graph& b : graphs) {
      Graph p = cartesian_product(a, b);
      bool factors_reflective = true;
      for (const Graph& f : factorize(p)) factors_reflective = factors_reflective && is_reflective(f).reflective;
      CHECK(is_reflective(p).reflective == factors_reflective);
      CHECK(is_reflective(p).reflective == (is_reflective(a).reflective && is_reflective(b).reflective));
    }
  }
}

TEST_CASE("locally disconnected reflective graphs are products") {
  for (const Graph& g : {hypercube(3), hypercube(4), cartesian_product(complete_graph(2), johnson(4, 2)),
                         cartesian_product(cocktail_party(3), complete_graph(3))}) {
    REQUIRE(is_reflective(g).reflective);
    CHECK_FALSE(is_locally_connected(g));
    CHECK_FALSE(is_prime(g));
  }
}
