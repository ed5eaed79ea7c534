#include "doctest.h"

#include <cmath>
#include <numbers>

#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/ollivier.hpp"
#include "rcurv/spectral.hpp"

using namespace rcurv;

namespace {

std::vector<Graph> spectral_corpus() {
  return {complete_graph(2), complete_graph(5), cycle(5),      cycle(6),     path(4),
          petersen(),        hypercube(4),      johnson(6, 3), schlafli(),   gosset(),
          halved_cube(6),    complete_bipartite(3, 3),        cartesian_product(complete_graph(2), johnson(4, 2))};
}

}  // namespace

TEST_CASE("Laplacian spectra") {
  auto k2 = laplacian_spectrum(complete_graph(2)).eigenvalues;
  CHECK(k2[0] == doctest::Approx(0).epsilon(1e-12));
  CHECK(k2[1] == doctest::Approx(2));

  // Q_n: eigenvalue 2k with multiplicity C(n, k).
  for (int n = 1; n <= 5; ++n) {
    auto s = laplacian_spectrum(hypercube(n)).multiplicities();
    REQUIRE(s.size() == static_cast<std::size_t>(n + 1));
    std::size_t binom = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(std::abs(s[static_cast<std::size_t>(k)].first - 2 * k) < 1e-8);
      CHECK(s[static_cast<std::size_t>(k)].second == binom);
      binom = binom * static_cast<std::size_t>(n - k) / static_cast<std::size_t>(k + 1);
    }
  }

  // C_n: 2 - 2 cos(2 pi k / n).
  for (int n = 3; n <= 9; ++n) {
    std::vector<double> expected;
    for (int k = 0; k < n; ++k) expected.push_back(2 - 2 * std::cos(2 * std::numbers::pi * k / n));
    std::sort(expected.begin(), expected.end());
    auto got = laplacian_spectrum(cycle(n)).eigenvalues;
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < 1e-8);
  }

  CHECK(std::abs(smallest_positive_laplacian_eigenvalue(johnson(5, 2)) - 5) < 1e-8);
  CHECK(std::abs(smallest_positive_laplacian_eigenvalue(complete_graph(2)) - 2) < 1e-8);
  CHECK(std::abs(smallest_positive_laplacian_eigenvalue(gosset()) - 18) < 1e-8);
  CHECK(std::abs(smallest_positive_laplacian_eigenvalue(cycle(6)) - 1) < 1e-8);
  CHECK_THROWS_AS(smallest_positive_laplacian_eigenvalue(complete_graph(1)), TrivialGraphError);
  CHECK_THROWS_AS(laplacian_spectrum(cycle(4), 0), InvalidParameter);
}

TEST_CASE("Jacobi preserves trace and Frobenius norm") {
  for (const Graph& g : spectral_corpus()) {
    for (const SymmetricMatrix& m : {laplacian_matrix(g), adjacency_matrix(g)}) {
      auto ev = jacobi_eigenvalues(m);
      double trace = 0;
      double frob = 0;
      for (std::size_t i = 0; i < m.n; ++i) trace += m(i, i);
      for (double x : m.a) frob += x * x;
      double sum = 0;
      double sq = 0;
      for (double v : ev) {
        sum += v;
        sq += v * v;
      }
      CHECK(ev.size() == g.vertex_count());
      CHECK(std::abs(sum - trace) < 1e-8);
      CHECK(std::abs(sq - frob) < 1e-6);
    }
  }
}

TEST_CASE("Jacobi sweep limit") {
  CHECK_THROWS_AS(jacobi_eigenvalues(adjacency_matrix(petersen()), 1e-10, 0), NoConvergenceError);
}

TEST_CASE("adjacency spectra are descending with integer snaps reported") {
  auto s = adjacency_spectrum(schlafli());
  CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
  CHECK(std::abs(s.eigenvalues[0] - 16) < 1e-8);
  auto snap = integer_snap(s);
  CHECK(snap.integral);
  CHECK(snap.max_deviation < 1e-6);
  CHECK_FALSE(integer_snap(adjacency_spectrum(cycle(5))).integral);
}

TEST_CASE("distance regularity") {
  CHECK(is_distance_regular(cycle(5)) == IntersectionArray{{2, 1}, {1, 1}});
  CHECK(is_distance_regular(schlafli()) == IntersectionArray{{16, 5}, {1, 8}});
  CHECK(is_distance_regular(gosset()) == IntersectionArray{{27, 10, 1}, {1, 10, 27}});
  CHECK(is_distance_regular(complete_graph(4)) == IntersectionArray{{3}, {1}});
  CHECK(is_distance_regular(johnson(6, 3)) == IntersectionArray{{9, 4, 1}, {1, 4, 9}});
  auto p4 = distance_regularity(path(4));
  CHECK_FALSE(p4.array);
  REQUIRE(p4.counterexample);
  for (const Graph& g : spectral_corpus()) {
    auto dr = is_distance_regular(g);
    CHECK(dr == distance_regularity_recount(g));
    if (dr) CHECK(dr->valid());
  }
  CHECK_FALSE(IntersectionArray{{3, 3}, {2, 1}}.valid());
}

TEST_CASE("Lichnerowicz sharpness") {
  auto j63 = is_lichnerowicz_sharp(johnson(6, 3));
  CHECK(j63.sharp);
  CHECK(j63.kappa_min == Rational(6));
  CHECK(std::abs(j63.lambda - 6) < 1e-8);
  CHECK_FALSE(is_lichnerowicz_sharp(cycle(6)).sharp);
  Graph kb = complete_bipartite(3, 3);
  auto r = is_lichnerowicz_sharp(kb);
  CHECK(std::abs(r.lambda - 3) < 1e-8);
  CHECK(r.sharp == (std::abs(r.kappa_min.to_double() - 3) <= 1e-8));
  for (const Graph& g : spectral_corpus()) CHECK(is_lichnerowicz_sharp(g).inequality_holds);
}

TEST_CASE("theta condition") {
  auto go = theta_condition(gosset());
  CHECK(std::abs(go.theta - 9) < 1e-8);
  CHECK(go.holds);
  CHECK(go.identity_holds);
  auto sc = theta_condition(schlafli());
  CHECK(std::abs(sc.theta - 4) < 1e-8);
  CHECK(sc.holds);
  auto c5 = theta_condition(cycle(5));
  CHECK(std::abs(c5.theta - 2 * std::cos(2 * std::numbers::pi / 5)) < 1e-8);
  CHECK_FALSE(c5.holds);
  CHECK(theta_condition(complete_graph(5)).holds);
  CHECK_THROWS_AS(theta_condition(path(4)), NotDistanceRegularError);
}
