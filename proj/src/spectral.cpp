#include "rcurv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rcurv/errors.hpp"
#include "rcurv/ollivier.hpp"

namespace rcurv {

namespace {

// Rotates m in place; accumulates into v when given.
void jacobi_sweeps(SymmetricMatrix& m, SymmetricMatrix* v, double tol, int max_sweeps) {
  const std::size_t n = m.n;
  auto off_mass = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += m(i, j) * m(i, j);
      }
    }
    return std::sqrt(s);
  };
  int sweeps = 0;
  while (off_mass() >= tol) {
    if (sweeps++ == max_sweeps) throw NoConvergenceError("Jacobi sweep limit reached");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = m(k, p);
          const double akq = m(k, q);
          m(k, p) = c * akp - s * akq;
          m(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = m(p, k);
          const double aqk = m(q, k);
          m(p, k) = c * apk - s * aqk;
          m(q, k) = s * apk + c * aqk;
        }
        m(p, q) = 0;
        m(q, p) = 0;
        if (v == nullptr) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = (*v)(k, p);
          const double vkq = (*v)(k, q);
          (*v)(k, p) = c * vkp - s * vkq;
          (*v)(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymmetricMatrix m, double tol, int max_sweeps) {
  jacobi_sweeps(m, nullptr, tol, max_sweeps);
  std::vector<double> out(m.n);
  for (std::size_t i = 0; i < m.n; ++i) out[i] = m(i, i);
  return out;
}

EigenSystem jacobi_eigensystem(SymmetricMatrix m, double tol, int max_sweeps) {
  EigenSystem es;
  es.vectors = SymmetricMatrix{m.n, std::vector<double>(m.n * m.n, 0.0)};
  for (std::size_t i = 0; i < m.n; ++i) es.vectors(i, i) = 1;
  jacobi_sweeps(m, &es.vectors, tol, max_sweeps);
  es.values.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) es.values[i] = m(i, i);
  return es;
}

std::vector<std::pair<double, std::size_t>> Spectrum::multiplicities(double merge_tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double v : eigenvalues) {
    if (!out.empty() && std::abs(out.back().first - v) <= merge_tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix m{g.vertex_count(), std::vector<double>(g.vertex_count() * g.vertex_count(), 0.0)};
  for (Vertex v = 0; v < g.vertex_count(); ++v) m(v, v) = static_cast<double>(g.degree(v));
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = -1;
    m(e.v, e.u) = -1;
  }
  return m;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m{g.vertex_count(), std::vector<double>(g.vertex_count() * g.vertex_count(), 0.0)};
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return m;
}

Spectrum laplacian_spectrum(const Graph& g, double tol) {
  if (tol <= 0) throw InvalidParameter("tolerance must be positive");
  Spectrum s{jacobi_eigenvalues(laplacian_matrix(g), tol), tol};
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

Spectrum adjacency_spectrum(const Graph& g, double tol) {
  if (tol <= 0) throw InvalidParameter("tolerance must be positive");
  Spectrum s{jacobi_eigenvalues(adjacency_matrix(g), tol), tol};
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

double smallest_positive_laplacian_eigenvalue(const Graph& g, double tol) {
  if (g.vertex_count() < 2) throw TrivialGraphError("a single vertex has no positive eigenvalue");
  Spectrum s = laplacian_spectrum(g, tol);
  // Eigenvalue error of the Jacobi output is bounded by the off-diagonal
  // mass, which is below tol.
  if (std::abs(s.eigenvalues[0]) > 100 * tol || s.eigenvalues[1] <= 100 * tol) {
    throw InternalError("Laplacian kernel is not one-dimensional on a connected graph");
  }
  return s.eigenvalues[1];
}

IntegerSnap integer_snap(const Spectrum& s, double window) {
  IntegerSnap out;
  for (double v : s.eigenvalues) {
    const double r = std::round(v);
    const double dev = std::abs(v - r);
    out.nearest.push_back(static_cast<long long>(r));
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > window) out.integral = false;
  }
  return out;
}

DistanceRegularity distance_regularity(const Graph& g) {
  const auto& d = g.distances();
  const int diam = g.diameter();
  DistanceRegularity out;
  if (diam == 0) return out;
  // b[i], c[i] for distance i; -1 until first seen.
  std::vector<int> b(static_cast<std::size_t>(diam) + 1, -1);
  std::vector<int> c(static_cast<std::size_t>(diam) + 1, -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      const int k = d(x, y);
      int up = 0;
      int down = 0;
      for (Vertex z : g.neighbors(y)) {
        if (d(x, z) == k + 1) ++up;
        if (d(x, z) == k - 1) ++down;
      }
      const auto ks = static_cast<std::size_t>(k);
      if (b[ks] < 0) {
        b[ks] = up;
        c[ks] = down;
      } else if (b[ks] != up || c[ks] != down) {
        out.counterexample = std::pair{x, y};
        return out;
      }
    }
  }
  IntersectionArray ia;
  ia.b.assign(b.begin(), b.end() - 1);
  ia.c.assign(c.begin() + 1, c.end());
  out.array = ia;
  return out;
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
  return distance_regularity(g).array;
}

std::optional<IntersectionArray> distance_regularity_recount(const Graph& g) {
  const auto& d = g.distances();
  const std::size_t n = g.vertex_count();
  int diam = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) diam = std::max(diam, d(x, y));
  }
  if (diam == 0) return std::nullopt;
  std::vector<std::vector<std::pair<int, int>>> seen(static_cast<std::size_t>(diam) + 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      int up = 0;
      int down = 0;
      for (Vertex z = 0; z < n; ++z) {
        if (d(y, z) != 1) continue;
        if (d(x, z) - d(x, y) == 1) ++up;
        if (d(x, y) - d(x, z) == 1) ++down;
      }
      seen[static_cast<std::size_t>(d(x, y))].emplace_back(up, down);
    }
  }
  IntersectionArray ia;
  for (int k = 0; k <= diam; ++k) {
    const auto& s = seen[static_cast<std::size_t>(k)];
    if (std::any_of(s.begin(), s.end(), [&](const auto& p) { return p != s.front(); })) return std::nullopt;
    if (k < diam) ia.b.push_back(s.front().first);
    if (k > 0) ia.c.push_back(s.front().second);
  }
  return ia;
}

LichnerowiczReport is_lichnerowicz_sharp(const Graph& g, const Rational& kappa_min, double tol) {
  LichnerowiczReport r;
  r.kappa_min = kappa_min;
  r.lambda = smallest_positive_laplacian_eigenvalue(g);
  const double k = kappa_min.to_double();
  r.sharp = kappa_min > Rational(0) && std::abs(r.lambda - k) <= tol;
  r.inequality_holds = kappa_min <= Rational(0) || r.lambda >= k - tol;
  return r;
}

LichnerowiczReport is_lichnerowicz_sharp(const Graph& g, double tol) {
  return is_lichnerowicz_sharp(g, min_edge_curvature(g).minimum, tol);
}

ThetaReport theta_condition(const Graph& g, const IntersectionArray& ia, double tol) {
  if (g.vertex_count() < 2) throw TrivialGraphError("theta needs at least two vertices");
  if (ia.b.empty() || static_cast<std::size_t>(ia.b[0]) != g.degree(0)) {
    throw NotDistanceRegularError("intersection array does not belong to this graph");
  }
  ThetaReport r;
  Spectrum a = adjacency_spectrum(g);
  r.theta = a.eigenvalues[1];
  r.b1_minus_1 = ia.b1() - 1;
  r.lambda = smallest_positive_laplacian_eigenvalue(g);
  r.holds = std::abs(r.theta - r.b1_minus_1) <= tol;
  r.identity_holds = std::abs(r.theta - (ia.b[0] - r.lambda)) <= tol;
  return r;
}

ThetaReport theta_condition(const Graph& g, double tol) {
  auto dr = distance_regularity(g);
  if (!dr.array) throw NotDistanceRegularError("graph is not distance-regular");
  return theta_condition(g, *dr.array, tol);
}

}  // namespace rcurv
