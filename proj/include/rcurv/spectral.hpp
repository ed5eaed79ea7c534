#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcurv/graph.hpp"
#include "rcurv/intersection_array.hpp"
#include "rcurv/rational.hpp"

namespace rcurv {

// Dense symmetric matrix, row-major.
struct SymmetricMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
// tol. Eigenvalues come back unsorted (diagonal order).
// Throws NoConvergenceError after max_sweeps sweeps.
std::vector<double> jacobi_eigenvalues(SymmetricMatrix m, double tol = 1e-10, int max_sweeps = 100);

// Same sweep, also accumulating the rotations: column k of `vectors`
// (row-major, vectors(i, k)) is the eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  SymmetricMatrix vectors;  // square, not symmetric; reuses the storage type
};
EigenSystem jacobi_eigensystem(SymmetricMatrix m, double tol = 1e-10, int max_sweeps = 100);

struct Spectrum {
  std::vector<double> eigenvalues;  // with multiplicity
  double tolerance = 1e-10;

  // Distinct values (clustered within merge_tol) with their multiplicities.
  std::vector<std::pair<double, std::size_t>> multiplicities(double merge_tol = 1e-6) const;
};

SymmetricMatrix laplacian_matrix(const Graph& g);  // D - A
SymmetricMatrix adjacency_matrix(const Graph& g);

Spectrum laplacian_spectrum(const Graph& g, double tol = 1e-10);  // ascending
Spectrum adjacency_spectrum(const Graph& g, double tol = 1e-10);  // descending

// The connected case has a one-dimensional kernel, so this is the second
// Laplacian eigenvalue; it must clear tol while the first must not.
double smallest_positive_laplacian_eigenvalue(const Graph& g, double tol = 1e-10);

// Reported, never applied: how far each eigenvalue is from the nearest integer.
struct IntegerSnap {
  bool integral = true;  // every eigenvalue within window of an integer
  double max_deviation = 0;
  std::vector<long long> nearest;
};
IntegerSnap integer_snap(const Spectrum& s, double window = 1e-6);

struct DistanceRegularity {
  std::optional<IntersectionArray> array;
  // On failure: a base vertex x and a vertex y whose counts disagree with an
  // earlier pair at the same distance.
  std::optional<std::pair<Vertex, Vertex>> counterexample;
};

DistanceRegularity distance_regularity(const Graph& g);
std::optional<IntersectionArray> is_distance_regular(const Graph& g);

// Independent recount straight from the distance matrix, scanning every
// vertex as a candidate neighbour.
std::optional<IntersectionArray> distance_regularity_recount(const Graph& g);

struct LichnerowiczReport {
  bool sharp = false;
  double lambda = 0;
  Rational kappa_min;
  bool inequality_holds = true;  // lambda >= kappa_min - tol whenever kappa_min > 0
};

LichnerowiczReport is_lichnerowicz_sharp(const Graph& g, const Rational& kappa_min, double tol = 1e-8);
LichnerowiczReport is_lichnerowicz_sharp(const Graph& g, double tol = 1e-8);

struct ThetaReport {
  bool holds = false;
  double theta = 0;  // second largest adjacency eigenvalue
  int b1_minus_1 = 0;
  double lambda = 0;
  bool identity_holds = false;  // theta = b_0 - lambda
};

ThetaReport theta_condition(const Graph& g, const IntersectionArray& ia, double tol = 1e-8);
// Computes the array first; throws NotDistanceRegularError without one.
ThetaReport theta_condition(const Graph& g, double tol = 1e-8);

}  // namespace rcurv
