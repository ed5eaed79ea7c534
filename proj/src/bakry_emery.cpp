#include "rcurv/bakry_emery.hpp"

#include <algorithm>
#include <cmath>

#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"
#include "rcurv/spectral.hpp"

namespace rcurv {
namespace {

using Matrix = std::vector<std::vector<Rational>>;
using Functional = std::vector<Rational>;

Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Rational>(n)); }

// q += coef * (u v^T + v u^T) / 2
void add_sym_outer(Matrix& q, const Rational& coef, const Functional& u, const Functional& v) {
  const Rational half = coef / Rational(2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const Rational t = half * u[i] * v[j];
      q[i][j] += t;
      q[j][i] += t;
    }
  }
}

struct LocalFrame {
  Vertex x;
  VertexSet order;  // x, then S1, then S2
  std::size_t inner;
  std::vector<int> pos;  // vertex -> index in order, -1 outside B2(x)
};

LocalFrame frame(const Graph& g, Vertex x) {
  LocalFrame f{x, {x}, 0, std::vector<int>(g.vertex_count(), -1)};
  VertexSet s1 = sphere(g, x, 1);
  VertexSet s2 = sphere(g, x, 2);
  f.order.insert(f.order.end(), s1.begin(), s1.end());
  f.order.insert(f.order.end(), s2.begin(), s2.end());
  f.inner = s1.size();
  for (std::size_t i = 0; i < f.order.size(); ++i) f.pos[f.order[i]] = static_cast<int>(i);
  return f;
}

Functional gradient(const LocalFrame& f, Vertex a, Vertex b) {  // f(b) - f(a)
  Functional u(f.order.size());
  u[static_cast<std::size_t>(f.pos[b])] += 1;
  u[static_cast<std::size_t>(f.pos[a])] -= 1;
  return u;
}

Functional laplacian_at(const Graph& g, const LocalFrame& f, Vertex v) {
  Functional u(f.order.size());
  for (Vertex w : g.neighbors(v)) {
    u[static_cast<std::size_t>(f.pos[w])] += 1;
    u[static_cast<std::size_t>(f.pos[v])] -= 1;
  }
  return u;
}

// Gamma f(v) on the frame, for v in B1(x).
void add_gamma_at(const Graph& g, const LocalFrame& f, Vertex v, const Rational& coef, Matrix& q) {
  for (Vertex w : g.neighbors(v)) {
    Functional d = gradient(f, v, w);
    add_sym_outer(q, coef / Rational(2), d, d);
  }
}

LocalForm drop_gauge(const LocalFrame& f, const Matrix& full, std::size_t keep) {
  LocalForm out;
  out.x = f.x;
  out.inner = f.inner;
  out.support.assign(f.order.begin() + 1, f.order.begin() + 1 + static_cast<std::ptrdiff_t>(keep));
  out.matrix = zeros(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    for (std::size_t j = 0; j < keep; ++j) out.matrix[i][j] = full[i + 1][j + 1];
  }
  return out;
}

Functional apply_laplacian(const Graph& g, const Functional& h) {
  Functional out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] += h[w] - h[v];
  }
  return out;
}

Functional gamma_i(const Graph& g, int i, const Functional& a, const Functional& b) {
  if (i == 0) {
    Functional out(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[v] * b[v];
    return out;
  }
  Functional t1 = apply_laplacian(g, gamma_i(g, i - 1, a, b));
  Functional t2 = gamma_i(g, i - 1, a, apply_laplacian(g, b));
  Functional t3 = gamma_i(g, i - 1, apply_laplacian(g, a), b);
  for (std::size_t v = 0; v < t1.size(); ++v) t1[v] = (t1[v] - t2[v] - t3[v]) / Rational(2);
  return t1;
}

}  // namespace

Rational LocalForm::evaluate(const std::vector<Rational>& f) const {
  Rational s;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) s += f[i] * matrix[i][j] * f[j];
  }
  return s;
}

LocalForm gamma_form(const Graph& g, Vertex x) {
  LocalFrame f = frame(g, x);
  Matrix q = zeros(f.order.size());
  add_gamma_at(g, f, x, Rational(1), q);
  return drop_gauge(f, q, f.inner);
}

LocalForm gamma2_form(const Graph& g, Vertex x) {
  LocalFrame f = frame(g, x);
  Matrix q = zeros(f.order.size());
  // 1/2 Delta Gamma f(x) = 1/2 sum_{y ~ x} (Gamma f(y) - Gamma f(x))
  const auto deg = static_cast<std::int64_t>(g.degree(x));
  for (Vertex y : g.neighbors(x)) add_gamma_at(g, f, y, Rational(1, 2), q);
  add_gamma_at(g, f, x, Rational(-deg, 2), q);
  // - Gamma(f, Delta f)(x) = -1/2 sum_{y ~ x} (f(y) - f(x)) (Delta f(y) - Delta f(x))
  Functional lx = laplacian_at(g, f, x);
  for (Vertex y : g.neighbors(x)) {
    Functional ly = laplacian_at(g, f, y);
    for (std::size_t i = 0; i < ly.size(); ++i) ly[i] -= lx[i];
    add_sym_outer(q, Rational(-1, 2), gradient(f, x, y), ly);
  }
  return drop_gauge(f, q, f.order.size() - 1);
}

std::vector<std::vector<Rational>> gamma_i_matrix_symbolic(const Graph& g, Vertex x, int i) {
  const std::size_t n = g.vertex_count();
  Matrix out = zeros(n);
  for (std::size_t a = 0; a < n; ++a) {
    Functional ea(n);
    ea[a] = 1;
    for (std::size_t b = 0; b < n; ++b) {
      Functional eb(n);
      eb[b] = 1;
      out[a][b] = gamma_i(g, i, ea, eb)[x];
    }
  }
  return out;
}

bool local_form_matches_symbolic(const Graph& g, Vertex x, int i) {
  if (i != 1 && i != 2) throw InvalidParameter("only Gamma_1 and Gamma_2 have local forms");
  const LocalForm form = i == 1 ? gamma_form(g, x) : gamma2_form(g, x);
  const Matrix full = gamma_i_matrix_symbolic(g, x, i);
  const std::size_t n = g.vertex_count();
  std::vector<bool> local(n, false);
  local[x] = true;
  for (Vertex v : form.support) local[v] = true;
  for (std::size_t a = 0; a < n; ++a) {
    Rational row;
    for (std::size_t b = 0; b < n; ++b) {
      row += full[a][b];
      if (full[a][b] != full[b][a]) return false;
      if ((!local[a] || !local[b]) && !full[a][b].is_zero()) return false;
    }
    if (!row.is_zero()) return false;
  }
  for (std::size_t r = 0; r < form.support.size(); ++r) {
    for (std::size_t c = 0; c < form.support.size(); ++c) {
      if (form.matrix[r][c] != full[form.support[r]][form.support[c]]) return false;
    }
  }
  return true;
}

double generalized_min_eigenvalue(const std::vector<std::vector<Rational>>& a,
                                  const std::vector<std::vector<Rational>>& b, double tol) {
  const std::size_t n = b.size();
  SymmetricMatrix bm{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bm(i, j) = b[i][j].to_double();
  }
  EigenSystem es = jacobi_eigensystem(bm);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] < -tol) throw DegenerateFormError("Gamma form is not positive semidefinite");
    if (es.values[k] > tol) kept.push_back(k);
  }
  if (kept.empty()) throw DegenerateFormError("Gamma form vanishes");
  // C = L^{-1/2} U^T A U L^{-1/2} on the kept eigenvectors.
  const std::size_t r = kept.size();
  std::vector<double> au(n * r, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j].to_double() * es.vectors(j, kept[c]);
      au[i * r + c] = s;
    }
  }
  SymmetricMatrix cm{r, std::vector<double>(r * r)};
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t c = 0; c < r; ++c) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) s += es.vectors(i, kept[p]) * au[i * r + c];
      cm(p, c) = s / std::sqrt(es.values[kept[p]] * es.values[kept[c]]);
    }
  }
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t c = p + 1; c < r; ++c) cm(p, c) = cm(c, p) = (cm(p, c) + cm(c, p)) / 2;
  }
  auto ev = jacobi_eigenvalues(cm);
  return *std::min_element(ev.begin(), ev.end());
}

double bakry_emery_curvature(const Graph& g, Vertex x, double tol, const Rational& scale) {
  LocalForm a = gamma2_form(g, x);
  LocalForm b = gamma_form(g, x);
  const std::size_t m = a.inner;
  const std::size_t s = a.matrix.size();
  // Schur complement of the outer block, which must be diagonal and positive.
  Matrix schur = zeros(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) schur[i][j] = a.matrix[i][j];
  }
  for (std::size_t k = m; k < s; ++k) {
    for (std::size_t l = m; l < s; ++l) {
      if (k != l && !a.matrix[k][l].is_zero()) throw InternalError("outer block of Gamma_2 is not diagonal");
    }
    const Rational& dkk = a.matrix[k][k];
    if (dkk.sign() <= 0) throw InternalError("outer block of Gamma_2 is not positive");
    for (std::size_t i = 0; i < m; ++i) {
      if (a.matrix[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!a.matrix[k][j].is_zero()) schur[i][j] -= a.matrix[i][k] * a.matrix[k][j] / dkk;
      }
    }
  }
  Matrix bm = b.matrix;
  for (auto& row : schur) {
    for (auto& v : row) v *= scale;
  }
  for (auto& row : bm) {
    for (auto& v : row) v *= scale;
  }
  return generalized_min_eigenvalue(schur, bm, tol);
}

std::optional<Rational> snap_rational(double v, int max_den, double window) {
  for (int q = 1; q <= max_den; ++q) {
    const double p = std::round(v * q);
    if (std::abs(v - p / q) <= window) return Rational(static_cast<std::int64_t>(p), q);
  }
  return std::nullopt;
}

BeBoundReport be_effective_bound_report(const Graph& g, double tol) {
  BeBoundReport r;
  for (Vertex x = 0; x < g.vertex_count(); ++x) r.per_vertex.push_back(bakry_emery_curvature(g, x));
  r.k_min = *std::min_element(r.per_vertex.begin(), r.per_vertex.end());
  if (r.k_min <= tol) throw NonpositiveCurvatureError("Bakry-Emery curvature is not positive");
  r.k_snapped = snap_rational(r.k_min);
  r.diam_eff = effective_diameter(g);
  r.max_degree = g.max_degree();
  r.bound = static_cast<double>(r.max_degree) / r.k_min;
  r.holds = r.diam_eff.to_double() <= r.bound + tol;
  if (r.k_snapped) {
    r.equality = r.diam_eff == Rational(static_cast<std::int64_t>(r.max_degree)) / *r.k_snapped;
  } else {
    r.equality = std::abs(r.diam_eff.to_double() - r.bound) <= tol;
  }
  return r;
}

bool is_hypercube(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || (n & (n - 1)) != 0) return false;
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if (k > 12 || !g.is_regular() || g.degree(0) != static_cast<std::size_t>(k)) return false;
  return are_isomorphic(g, hypercube(k)).has_value();
}

RigidityReport be_rigidity_check(const std::vector<std::pair<std::string, Graph>>& corpus, double tol) {
  RigidityReport rep;
  for (const auto& [name, g] : corpus) {
    RigidityEntry e;
    e.name = name;
    e.hypercube = is_hypercube(g);
    try {
      e.equality = be_effective_bound_report(g, tol).equality;
      e.positive = true;
    } catch (const NonpositiveCurvatureError&) {
      e.positive = false;
    }
    if (e.positive && e.equality != e.hypercube) rep.passed = false;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace rcurv
