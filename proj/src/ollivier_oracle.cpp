// Exhaustive curvature oracle. Deliberately shares nothing with the simplex
// path beyond the graph and its distance matrix.
#include <algorithm>
#include <functional>
#include <optional>

#include "rcurv/errors.hpp"
#include "rcurv/ollivier.hpp"

namespace rcurv {
namespace {

// Row of a difference constraint on the free variables: coef . v <= rhs.
struct Row {
  std::vector<int> coef;
  int rhs;
};

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// Solves the square system rows[pick] as equalities; nullopt if singular.
std::optional<std::vector<Rational>> solve_tight(const std::vector<Row>& rows,
                                                 const std::vector<std::size_t>& pick) {
  const std::size_t k = pick.size();
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[pick[i]].coef[j];
    a[i][k] = rows[pick[i]].rhs;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (p < k && a[p][col].is_zero()) ++p;
    if (p == k) return std::nullopt;
    std::swap(a[p], a[col]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = a[i][k] / a[i][i];
  return v;
}

}  // namespace

Rational brute_force_curvature_oracle(const Graph& g, Vertex x, Vertex y, std::size_t max_support) {
  if (x == y) throw SameVertexError("curvature needs two distinct vertices");
  const auto& d = g.distances();

  VertexSet support{x, y};
  for (Vertex z : g.neighbors(x)) support.push_back(z);
  for (Vertex z : g.neighbors(y)) support.push_back(z);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() > max_support) {
    throw SupportTooLargeError("support has " + std::to_string(support.size()) +
                               " vertices, limit " + std::to_string(max_support));
  }

  const int dxy = d(x, y);
  std::vector<Vertex> free;
  for (Vertex z : support) {
    if (z != x && z != y) free.push_back(z);
  }
  const std::size_t k = free.size();

  auto laplacian_gap = [&](const std::function<Rational(Vertex)>& f) {
    Rational lx;
    Rational ly;
    for (Vertex z : g.neighbors(x)) lx += f(z) - f(x);
    for (Vertex z : g.neighbors(y)) ly += f(z) - f(y);
    return lx - ly;
  };

  if (k == 0) {
    auto f = [&](Vertex v) { return Rational(v == y ? dxy : 0); };
    return laplacian_gap(f) / Rational(dxy);
  }

  // |f(u) - f(v)| <= d(u, v) for every support pair, with f(x) = 0 and
  // f(y) = d(x, y) substituted.
  std::vector<Row> rows;
  auto add = [&](std::vector<int> coef, int rhs) { rows.push_back({std::move(coef), rhs}); };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> e(k, 0);
    e[i] = 1;
    std::vector<int> ne(k, 0);
    ne[i] = -1;
    add(e, d(free[i], x));
    add(ne, d(free[i], x));
    add(e, dxy + d(free[i], y));
    add(ne, d(free[i], y) - dxy);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<int> c(k, 0);
      c[i] = 1;
      c[j] = -1;
      add(c, d(free[i], free[j]));
    }
  }

  auto value_of = [&](const std::vector<Rational>& v) {
    auto f = [&](Vertex w) -> Rational {
      if (w == x) return Rational(0);
      if (w == y) return Rational(dxy);
      return v[static_cast<std::size_t>(std::lower_bound(free.begin(), free.end(), w) - free.begin())];
    };
    return laplacian_gap(f);
  };

  std::optional<Rational> best;
  if (binomial(rows.size(), k) <= static_cast<double>(kLiteralSubsetLimit)) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (auto v = solve_tight(rows, pick)) {
        bool feasible = std::all_of(rows.begin(), rows.end(), [&](const Row& r) {
          Rational lhs;
          for (std::size_t j = 0; j < k; ++j) {
            if (r.coef[j] != 0) lhs += Rational(r.coef[j]) * (*v)[j];
          }
          return lhs <= Rational(r.rhs);
        });
        if (feasible) {
          Rational val = value_of(*v);
          if (!best || val < *best) best = val;
        }
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == rows.size() - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  } else {
    // The constraint matrix is a network matrix, hence totally unimodular, so
    // with integer bounds every vertex is integral and lies in this box.
    std::vector<int> lo(k);
    std::vector<int> hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = std::max(-d(x, free[i]), dxy - d(y, free[i]));
      hi[i] = std::min(d(x, free[i]), dxy + d(y, free[i]));
    }
    std::vector<int> assign(k);
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (i == k) {
        std::vector<Rational> v(assign.begin(), assign.end());
        Rational val = value_of(v);
        if (!best || val < *best) best = val;
        return;
      }
      for (int a = lo[i]; a <= hi[i]; ++a) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          ok = std::abs(a - assign[j]) <= d(free[i], free[j]);
        }
        if (!ok) continue;
        assign[i] = a;
        dfs(i + 1);
      }
    };
    dfs(0);
  }
  if (!best) throw InternalError("oracle found no feasible point");
  return *best / Rational(dxy);
}

}  // namespace rcurv
