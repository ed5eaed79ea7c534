#include "doctest.h"

#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"

using namespace rcurv;

namespace {

bool regular_of(const Graph& g, std::size_t n, std::size_t deg) {
  return g.vertex_count() == n && g.is_regular() && g.degree(0) == deg;
}

std::vector<int> distance_profile(const Graph& g, Vertex v) {
  std::vector<int> out(static_cast<std::size_t>(g.diameter()) + 1, 0);
  for (int d : g.distances().row(v)) ++out[static_cast<std::size_t>(d)];
  return out;
}

int binom(int n, int k) {
  int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("cocktail party") {
  CHECK(are_isomorphic(cocktail_party(2), cycle(4)).has_value());
  Graph oct = cocktail_party(3);
  CHECK(regular_of(oct, 6, 4));
  CHECK(oct.diameter() == 2);
  CHECK(regular_of(cocktail_party(4), 8, 6));
  CHECK_FALSE(oct.adjacent(2, 3));
  CHECK_THROWS_AS(cocktail_party(1), InvalidParameter);
}

TEST_CASE("johnson") {
  CHECK(are_isomorphic(johnson(2, 1), complete_graph(2)).has_value());
  CHECK(are_isomorphic(johnson(4, 2), cocktail_party(3)).has_value());
  CHECK(regular_of(johnson(5, 2), 10, 6));
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) CHECK(regular_of(johnson(n, k), static_cast<std::size_t>(binom(n, k)),
                                                 static_cast<std::size_t>(k * (n - k))));
  }
  CHECK_THROWS_AS(johnson(4, 0), InvalidParameter);
  CHECK_THROWS_AS(johnson(4, 4), InvalidParameter);
}

TEST_CASE("halved cube") {
  CHECK(are_isomorphic(halved_cube(2), complete_graph(2)).has_value());
  CHECK(are_isomorphic(halved_cube(3), complete_graph(4)).has_value());
  CHECK(are_isomorphic(halved_cube(4), cocktail_party(4)).has_value());
  CHECK(regular_of(halved_cube(5), 16, 10));
  for (int n = 2; n <= 8; ++n) {
    CHECK(regular_of(halved_cube(n), std::size_t{1} << (n - 1), static_cast<std::size_t>(n * (n - 1) / 2)));
  }
  CHECK_THROWS_AS(halved_cube(1), InvalidParameter);
}

TEST_CASE("schlafli and gosset") {
  Graph s = schlafli();
  CHECK(regular_of(s, 27, 16));
  CHECK(s.diameter() == 2);
  Graph g = gosset();
  CHECK(regular_of(g, 56, 27));
  CHECK(g.diameter() == 3);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(distance_profile(g, v) == std::vector<int>{1, 27, 27, 1});
  }
  for (Vertex v : {Vertex{0}, Vertex{17}, Vertex{55}}) {
    VertexSet nb = sphere(g, v, 1);
    CHECK(are_isomorphic(induced_subgraph(g, nb).graph, s).has_value());
  }
  // Schläfli: the a/b/c labelling gives a_1 = 0, b_1 = 6, b_2 = 7, c_12 = 12.
  // The graph is the complement of the line-intersection rule.
  CHECK_FALSE(s.adjacent(0, 7));
  CHECK(s.adjacent(0, 6));
  CHECK_FALSE(s.adjacent(0, 12));
}

TEST_CASE("small families") {
  CHECK(regular_of(hypercube(3), 8, 3));
  CHECK(regular_of(hamming(2, 3), 9, 4));
  CHECK(regular_of(cycle(5), 5, 2));
  CHECK(complete_graph(1).vertex_count() == 1);
  CHECK(regular_of(complete_bipartite(3, 3), 6, 3));
  CHECK(path(4).edge_count() == 3);
  CHECK(regular_of(petersen(), 10, 3));
  CHECK_THROWS_AS(cycle(2), InvalidParameter);
  CHECK_THROWS_AS(hamming(2, 1), InvalidParameter);
}

TEST_CASE("cartesian product") {
  CHECK(are_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle(4)).has_value());
  Graph q = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)), complete_graph(2));
  CHECK(are_isomorphic(q, hypercube(3)).has_value());
  Graph a = johnson(4, 2);
  Graph b = cocktail_party(3);
  Graph p = cartesian_product(a, b);
  CHECK(effective_diameter(p) == Rational(2));
  CHECK(effective_diameter(p) == effective_diameter(a) + effective_diameter(b));
  CHECK(p.degree(0) == a.degree(0) + b.degree(0));

  for (auto [g1, g2] : {std::pair{cycle(5), path(3)}, std::pair{complete_bipartite(2, 3), complete_graph(3)}}) {
    Graph gp = cartesian_product(g1, g2);
    const Vertex n2 = static_cast<Vertex>(g2.vertex_count());
    for (Vertex u = 0; u < gp.vertex_count(); ++u) {
      for (Vertex v = 0; v < gp.vertex_count(); ++v) {
        CHECK(gp.distance(u, v) == g1.distance(u / n2, v / n2) + g2.distance(u % n2, v % n2));
      }
    }
  }
}

TEST_CASE("family DSL") {
  CHECK(parse_family("J 4 2").to_string() == "J 4 2");
  CHECK(build_family("cp 3").vertex_count() == 6);
  CHECK(build_family("Schlafli").vertex_count() == 27);
  Graph p = build_family("( J 4 2 x CP 3 )");
  CHECK(p.vertex_count() == 36);
  CHECK(build_family("(Q 1 x Q 1 x Q 1)").edge_count() == 12);
  for (const char* text : {"K 5", "CP 4", "HQ 5", "Q 3", "H 2 3", "C 7", "KB 2 3", "P 4", "gosset", "petersen",
                           "( K 2 x J 4 2 )"}) {
    FamilySpec spec = parse_family(text);
    CHECK(parse_family(spec.to_string()).to_string() == spec.to_string());
  }
  CHECK_THROWS_AS(parse_family("J 4"), ParseError);
  CHECK_THROWS_AS(parse_family("X 3"), ParseError);
  CHECK_THROWS_AS(parse_family("( K 2 x K 3"), ParseError);
  CHECK_THROWS_AS(parse_family("K 2 K 3"), ParseError);
  CHECK_THROWS_AS(build_family("J 4 7"), InvalidParameter);
}
