#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcurv/graph.hpp"
#include "rcurv/rational.hpp"

namespace rcurv {

// Quadratic form f -> f^T M f in the values of f on `support`, with f(x) = 0
// substituted (both forms are invariant under adding constants).
struct LocalForm {
  Vertex x;
  VertexSet support;                        // B1(x) \ {x} first, then S2(x), each ascending
  std::size_t inner = 0;                    // how many leading entries are neighbours of x
  std::vector<std::vector<Rational>> matrix;

  Rational evaluate(const std::vector<Rational>& f) const;
};

// Gamma f(x) = 1/2 sum_{y ~ x} (f(y) - f(x))^2.
LocalForm gamma_form(const Graph& g, Vertex x);

// Gamma_2 f(x) = 1/2 Delta Gamma f(x) - Gamma(f, Delta f)(x), assembled
// exactly from the local expansion.
LocalForm gamma2_form(const Graph& g, Vertex x);

// The bilinear recursion 2 Gamma_{i+1}(f,h) = Delta Gamma_i(f,h)
// - Gamma_i(f, Delta h) - Gamma_i(Delta f, h), Gamma_0(f,h) = fh, evaluated
// on every pair of indicator functions. Full |V| x |V| matrix at x, no gauge.
std::vector<std::vector<Rational>> gamma_i_matrix_symbolic(const Graph& g, Vertex x, int i);

// The symbolic Gamma_i matrix (i = 1, 2) is symmetric, kills constants,
// vanishes outside the local support and restricts to the local form.
bool local_form_matches_symbolic(const Graph& g, Vertex x, int i);

// min Gamma_2 f(x) / Gamma f(x) over f with Gamma f(x) > 0. The outer S2
// values enter Gamma_2 only through a positive diagonal block, so they are
// eliminated exactly by a Schur complement before the eigensolve.
// `scale` multiplies both forms (the quotient must not move).
double bakry_emery_curvature(const Graph& g, Vertex x, double tol = 1e-10, const Rational& scale = Rational(1));

// Smallest generalized eigenvalue of (a, b) on the range of b.
// Throws DegenerateFormError if b is indefinite or zero beyond tol.
double generalized_min_eigenvalue(const std::vector<std::vector<Rational>>& a,
                                  const std::vector<std::vector<Rational>>& b, double tol = 1e-10);

// Nearest p/q with q <= max_den within window, if any.
std::optional<Rational> snap_rational(double v, int max_den = 64, double window = 1e-6);

struct BeBoundReport {
  std::vector<double> per_vertex;
  double k_min = 0;
  std::optional<Rational> k_snapped;
  Rational diam_eff;
  std::size_t max_degree = 0;
  double bound = 0;  // max_degree / k_min
  bool holds = false;
  bool equality = false;  // exact when snapped, else within tol
};

// Throws NonpositiveCurvatureError unless every vertex has K(x) > tol.
BeBoundReport be_effective_bound_report(const Graph& g, double tol = 1e-8);

struct RigidityEntry {
  std::string name;
  bool hypercube = false;
  bool positive = false;  // K_min > tol; other graphs are skipped
  bool equality = false;
};

struct RigidityReport {
  std::vector<RigidityEntry> entries;
  bool passed = true;  // equality exactly on the hypercubes among positive entries
};

bool is_hypercube(const Graph& g);

RigidityReport be_rigidity_check(const std::vector<std::pair<std::string, Graph>>& corpus, double tol = 1e-8);

}  // namespace rcurv
