#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "rcurv/bakry_emery.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/spectral.hpp"

using namespace rcurv;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// The symbolic matrix must vanish outside B2(x), annihilate constants, and
// agree with the local form on the support.
void check_against_symbolic(const Graph& g, Vertex x, const LocalForm& form, const Matrix& full) {
  const std::size_t n = g.vertex_count();
  VertexSet b2 = ball(g, x, 2);
  for (std::size_t a = 0; a < n; ++a) {
    Rational row;
    for (std::size_t b = 0; b < n; ++b) {
      row += full[a][b];
      CHECK(full[a][b] == full[b][a]);
      if (!contains(b2, static_cast<Vertex>(a)) || !contains(b2, static_cast<Vertex>(b))) {
        CHECK(full[a][b].is_zero());
      }
    }
    CHECK(row.is_zero());
  }
  for (std::size_t i = 0; i < form.support.size(); ++i) {
    for (std::size_t j = 0; j < form.support.size(); ++j) {
      CHECK(form.matrix[i][j] == full[form.support[i]][form.support[j]]);
    }
  }
  for (Vertex v : b2) {
    // support is neighbours first, so not globally sorted
    if (v != x && std::find(form.support.begin(), form.support.end(), v) == form.support.end()) {
      for (Vertex w = 0; w < n; ++w) CHECK(full[v][w].is_zero());
    }
  }
}

}  // namespace

TEST_CASE("Gamma forms") {
  auto k2 = gamma_form(complete_graph(2), 0);
  CHECK(k2.support == VertexSet{1});
  CHECK(k2.matrix == Matrix{{Rational(1, 2)}});
  auto q2 = gamma_form(hypercube(2), 0);
  CHECK(q2.matrix == Matrix{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 2)}});
  auto star = gamma_form(complete_bipartite(1, 3), 0);
  REQUIRE(star.matrix.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(star.matrix[i][j] == (i == j ? Rational(1, 2) : Rational(0)));
  }
  // Indicator of a neighbour gives 1/2.
  Graph p = petersen();
  auto pf = gamma_form(p, 4);
  for (std::size_t i = 0; i < pf.support.size(); ++i) {
    std::vector<Rational> f(pf.support.size());
    f[i] = 1;
    CHECK(pf.evaluate(f) == Rational(1, 2));
  }
}

TEST_CASE("Gamma_2 forms") {
  auto k2 = gamma2_form(complete_graph(2), 0);
  CHECK(k2.matrix == Matrix{{Rational(1)}});
  for (const Graph& g : {complete_graph(2), complete_graph(4), path(3), path(4), cycle(5), cycle(6),
                         hypercube(3), complete_bipartite(2, 3), petersen(), cocktail_party(3),
                         cartesian_product(complete_graph(2), complete_graph(3))}) {
    REQUIRE(g.vertex_count() <= 10);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      LocalForm f2 = gamma2_form(g, x);
      check_against_symbolic(g, x, f2, gamma_i_matrix_symbolic(g, x, 2));
      check_against_symbolic(g, x, gamma_form(g, x), gamma_i_matrix_symbolic(g, x, 1));
      for (std::size_t i = 0; i < f2.matrix.size(); ++i) {
        for (std::size_t j = 0; j < f2.matrix.size(); ++j) CHECK(f2.matrix[i][j] == f2.matrix[j][i]);
      }
    }
  }
}

TEST_CASE("Gamma forms are positive semidefinite") {
  for (const Graph& g : {schlafli(), johnson(6, 3), cycle(7)}) {
    for (Vertex x = 0; x < g.vertex_count(); x += 3) {
      auto f = gamma_form(g, x);
      SymmetricMatrix m{f.matrix.size(), {}};
      for (const auto& row : f.matrix) {
        for (const auto& v : row) m.a.push_back(v.to_double());
      }
      auto ev = jacobi_eigenvalues(m);
      CHECK(*std::min_element(ev.begin(), ev.end()) >= -1e-10);
    }
  }
}

TEST_CASE("Bakry-Emery curvature values") {
  CHECK(std::abs(bakry_emery_curvature(complete_graph(2), 0) - 2) < 1e-9);
  // K_n: 1 + n/2.
  for (int n = 3; n <= 6; ++n) CHECK(std::abs(bakry_emery_curvature(complete_graph(n), 0) - (1 + n / 2.0)) < 1e-9);
  for (int n = 2; n <= 5; ++n) {
    Graph q = hypercube(n);
    for (Vertex x = 0; x < q.vertex_count(); ++x) CHECK(std::abs(bakry_emery_curvature(q, x) - 2) < 1e-6);
  }
  for (Vertex x = 0; x < 6; ++x) CHECK(bakry_emery_curvature(cycle(6), x) <= 1e-6);
  CHECK_THROWS_AS(bakry_emery_curvature(complete_graph(1), 0), DegenerateFormError);
}

TEST_CASE("quotient is scale invariant and constant on vertex-transitive graphs") {
  for (const Graph& g : {johnson(5, 2), schlafli(), halved_cube(5), petersen()}) {
    const double k0 = bakry_emery_curvature(g, 0);
    CHECK(std::abs(bakry_emery_curvature(g, 0, 1e-10, Rational(4)) - k0) < 1e-9);
    for (Vertex x = 1; x < g.vertex_count(); ++x) CHECK(std::abs(bakry_emery_curvature(g, x) - k0) < 1e-8);
  }
}

TEST_CASE("rational snapping") {
  CHECK(snap_rational(2.0000000001) == Rational(2));
  CHECK(snap_rational(2.5) == Rational(5, 2));
  CHECK(snap_rational(1.0 / 3 + 1e-9) == Rational(1, 3));
  CHECK_FALSE(snap_rational(std::sqrt(2.0)));
}

TEST_CASE("effective diameter bound") {
  auto q4 = be_effective_bound_report(hypercube(4));
  CHECK(q4.k_snapped == Rational(2));
  CHECK(q4.diam_eff == Rational(2));
  CHECK(q4.equality);
  CHECK(q4.holds);
  auto cp = be_effective_bound_report(cocktail_party(3));
  CHECK(cp.holds);
  CHECK_FALSE(cp.equality);
  auto k3 = be_effective_bound_report(complete_graph(3));
  CHECK(k3.holds);
  CHECK_FALSE(k3.equality);
  CHECK(k3.diam_eff.to_double() < k3.bound);
  CHECK_THROWS_AS(be_effective_bound_report(cycle(6)), NonpositiveCurvatureError);
}

TEST_CASE("rigidity on a corpus") {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n = 2; n <= 5; ++n) corpus.emplace_back("Q " + std::to_string(n), hypercube(n));
  corpus.emplace_back("CP 3", cocktail_party(3));
  corpus.emplace_back("J 4 2", johnson(4, 2));
  corpus.emplace_back("schlafli", schlafli());
  auto rep = be_rigidity_check(corpus);
  CHECK(rep.passed);
  for (const auto& e : rep.entries) {
    CHECK(e.positive);
    CHECK(e.equality == (e.name[0] == 'Q'));
  }
  CHECK(be_rigidity_check({}).passed);
  auto k2 = be_rigidity_check({{"K 2", complete_graph(2)}});
  CHECK(k2.passed);
  CHECK(k2.entries[0].equality);
  CHECK(k2.entries[0].hypercube);
  CHECK(is_hypercube(cycle(4)));
  CHECK_FALSE(is_hypercube(cycle(8)));
}
