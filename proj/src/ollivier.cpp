#include "rcurv/ollivier.hpp"

#include <algorithm>
#include <sstream>

#include "rcurv/errors.hpp"

namespace rcurv {

Rational CurvatureValue::at(Vertex v) const {
  auto it = std::lower_bound(support.begin(), support.end(), v);
  if (it == support.end() || *it != v) throw InvalidParameter("vertex outside the LP support");
  return optimizer[static_cast<std::size_t>(it - support.begin())];
}

LipschitzLP build_lipschitz_lp(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw SameVertexError("curvature needs two distinct vertices");
  const auto& d = g.distances();
  LipschitzLP lp{x, y, d(x, y), set_union(ball(g, x, 1), ball(g, y, 1)), {}, {}};
  const auto& s = lp.support;
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };
  lp.objective.assign(s.size(), Rational(0));
  // Delta f(x) - Delta f(y)
  for (Vertex z : g.neighbors(x)) lp.objective[index(z)] += 1;
  lp.objective[index(x)] -= static_cast<std::int64_t>(g.degree(x));
  for (Vertex z : g.neighbors(y)) lp.objective[index(z)] -= 1;
  lp.objective[index(y)] += static_cast<std::int64_t>(g.degree(y));
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u != v) lp.constraints.push_back({u, v, d(u, v)});
    }
  }
  return lp;
}

CurvatureValue solve_lipschitz_lp(const Graph& g, const LipschitzLP& lp, PivotRule rule) {
  const auto& d = g.distances();
  const auto& s = lp.support;
  constexpr std::size_t kFixed = static_cast<std::size_t>(-1);
  std::vector<std::size_t> var(s.size(), kFixed);
  std::vector<Rational> fixed(s.size());
  LinearProgram prog;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == lp.x) {
      fixed[i] = 0;
    } else if (s[i] == lp.y) {
      fixed[i] = lp.distance;
    } else {
      var[i] = prog.variable_count++;
    }
  }
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };
  prog.objective.assign(prog.variable_count, Rational(0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (var[i] == kFixed) {
      prog.objective_constant += lp.objective[i] * fixed[i];
    } else {
      prog.objective[var[i]] = lp.objective[i];
    }
  }
  for (const auto& c : lp.constraints) {
    // A pair constraint is implied when some other support vertex lies on a
    // u-v geodesic: chain the two shorter constraints.
    bool implied = std::any_of(s.begin(), s.end(), [&](Vertex w) {
      return w != c.u && w != c.v && d(c.u, w) + d(w, c.v) == d(c.u, c.v);
    });
    if (implied) continue;
    std::size_t iu = index(c.u);
    std::size_t iv = index(c.v);
    LinearProgram::Constraint con;
    con.rhs = c.bound;
    if (var[iu] != kFixed) {
      con.terms.emplace_back(var[iu], Rational(1));
    } else {
      con.rhs -= fixed[iu];
    }
    if (var[iv] != kFixed) {
      con.terms.emplace_back(var[iv], Rational(-1));
    } else {
      con.rhs += fixed[iv];
    }
    if (con.terms.empty()) {
      if (con.rhs.sign() < 0) throw InternalError("fixed values violate a Lipschitz constraint");
      continue;
    }
    prog.constraints.push_back(std::move(con));
  }

  LpSolution sol = solve_lp(prog, rule);
  CurvatureValue out;
  out.support = s;
  out.optimizer.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.optimizer[i] = var[i] == kFixed ? fixed[i] : sol.point[var[i]];
  }
  out.value = sol.value / Rational(lp.distance);
  return out;
}

CurvatureValue edge_curvature(const Graph& g, Vertex x, Vertex y) {
  if (!g.adjacent(x, y)) throw NotAdjacentError(x, y);
  return solve_lipschitz_lp(g, build_lipschitz_lp(g, x, y));
}

CurvatureValue long_range_curvature(const Graph& g, Vertex x, Vertex y) {
  return solve_lipschitz_lp(g, build_lipschitz_lp(g, x, y));
}

EdgeCurvatures min_edge_curvature(const Graph& g) {
  EdgeCurvatures out;
  const auto& edges = g.edges();
  for (const Edge& e : edges) out.per_edge.push_back(edge_curvature(g, e.u, e.v).value);
  if (edges.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (out.per_edge[i] < out.per_edge[best]) best = i;
  }
  out.minimum = out.per_edge[best];
  out.min_edge = edges[best];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (out.per_edge[i] != out.minimum) {
      out.is_constant = false;
      out.other_edge = edges[i];
      break;
    }
  }
  return out;
}

Rational curvature_from_intersection_array(const IntersectionArray& ia) {
  if (ia.b.empty()) throw InvalidParameter("empty intersection array");
  return Rational(1 + ia.b[0] - ia.b1());
}

bool optimizer_is_feasible(const Graph& g, const LipschitzLP& lp, const CurvatureValue& value) {
  (void)g;
  if (value.support != lp.support || value.optimizer.size() != lp.support.size()) return false;
  if (value.at(lp.x) != Rational(0) || value.at(lp.y) != Rational(lp.distance)) return false;
  for (const auto& c : lp.constraints) {
    if (value.at(c.u) - value.at(c.v) > Rational(c.bound)) return false;
  }
  Rational objective;
  for (std::size_t i = 0; i < lp.support.size(); ++i) {
    objective += lp.objective[i] * value.optimizer[i];
  }
  return objective / Rational(lp.distance) == value.value;
}

bool min_extension_is_lipschitz(const Graph& g, const CurvatureValue& value) {
  const auto& d = g.distances();
  std::vector<Rational> ext(g.vertex_count());
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    for (std::size_t i = 0; i < value.support.size(); ++i) {
      Rational candidate = value.optimizer[i] + Rational(d(z, value.support[i]));
      if (i == 0 || candidate < ext[z]) ext[z] = candidate;
    }
  }
  for (std::size_t i = 0; i < value.support.size(); ++i) {
    if (ext[value.support[i]] != value.optimizer[i]) return false;
  }
  for (const Edge& e : g.edges()) {
    if (abs(ext[e.u] - ext[e.v]) > Rational(1)) return false;
  }
  return true;
}

bool IntersectionArray::valid() const {
  if (b.empty() || b.size() != c.size() || c[0] != 1) return false;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] <= 0 || b[i] + c[i - 1] > b[0]) return false;
  }
  return b[0] > 0 && c.back() <= b[0];
}

std::string IntersectionArray::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ';';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ')';
  return out.str();
}

}  // namespace rcurv
