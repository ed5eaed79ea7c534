#include "rcurv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rcurv/bakry_emery.hpp"
#include "rcurv/classify.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/factorization.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"
#include "rcurv/ollivier.hpp"
#include "rcurv/reflective.hpp"
#include "rcurv/spectral.hpp"

namespace rcurv {
namespace {

std::string edge_text(Vertex x, Vertex y) { return "edge " + std::to_string(x) + "-" + std::to_string(y); }

class RowSink {
 public:
  explicit RowSink(std::string graph) : graph_(std::move(graph)) {}

  // Runs body, which returns a failure witness or nullopt; library errors
  // become failures carrying their message.
  void check(const std::string& name, const std::function<std::optional<std::string>()>& body) {
    CheckRow row{graph_, name, CheckStatus::kPass, {}};
    try {
      if (auto w = body()) {
        row.status = CheckStatus::kFail;
        row.detail = *w;
      }
    } catch (const std::exception& e) {
      row.status = CheckStatus::kFail;
      row.detail = e.what();
    }
    rows_.push_back(std::move(row));
  }

  void skip(const std::string& name, const std::string& why) {
    rows_.push_back({graph_, name, CheckStatus::kSkip, why});
  }

  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::string graph_;
  std::vector<CheckRow> rows_;
};

// Terminal columns of a UTF-8 string: continuation bytes take none.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct EdgeData {
  Vertex x;
  Vertex y;
  Rational kappa;
};

}  // namespace

Graph CorpusEntry::build() const {
  if (!source.empty() && source[0] == '@') return read_edge_list_file(source.substr(1));
  return build_family(source);
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& name, const std::string& expr) { out.push_back({name, expr}); };
  for (int k = 2; k <= 5; ++k) add("CP(" + std::to_string(k) + ")", "CP " + std::to_string(k));
  for (auto [n, k] : {std::pair{2, 1}, {4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    add("J(" + std::to_string(n) + "," + std::to_string(k) + ")", "J " + std::to_string(n) + " " + std::to_string(k));
  }
  for (int n = 3; n <= 6; ++n) add("HQ(" + std::to_string(n) + ")", "HQ " + std::to_string(n));
  add("Schläfli", "schlafli");
  add("Gosset", "gosset");
  for (int n = 1; n <= 5; ++n) add("Q" + std::to_string(n), "Q " + std::to_string(n));
  add("H(2,3)", "H 2 3");
  add("J(4,2) x CP(3)", "( J 4 2 x CP 3 )");
  add("K2 x J(4,2)", "( K 2 x J 4 2 )");
  add("Q2 x CP(3)", "( Q 2 x CP 3 )");
  add("C5", "C 5");
  add("C6", "C 6");
  add("K3,3", "KB 3 3");
  add("Petersen", "petersen");
  add("P4", "P 4");
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file " + path);
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string text = line.substr(first, last - first + 1);
    if (text[0] == '@') {
      std::filesystem::path p(text.substr(1));
      if (p.is_relative()) p = base / p;
      out.push_back({text, "@" + p.string()});
    } else {
      out.push_back({text, text});
    }
  }
  return out;
}

std::vector<CorpusEntry> resolve_corpus(const std::string& spec) {
  if (spec == "standard") return standard_corpus();
  return read_corpus_file(spec);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      return "SKIP";
  }
  return "?";
}

bool VerifyReport::passed() const { return count(CheckStatus::kFail) == 0; }

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const CheckRow& r) { return r.status == s; }));
}

std::string VerifyReport::table() const {
  std::size_t gw = 5;
  std::size_t cw = 5;
  for (const CheckRow& r : rows) {
    gw = std::max(gw, display_width(r.graph));
    cw = std::max(cw, display_width(r.check));
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - display_width(s) + 2, ' '); };
  std::ostringstream out;
  out << pad("graph", gw) << pad("check", cw) << "status  detail\n";
  for (const CheckRow& r : rows) {
    out << pad(r.graph, gw) << pad(r.check, cw) << to_string(r.status) << (r.detail.empty() ? "" : "    " + r.detail)
        << '\n';
  }
  out << count(CheckStatus::kPass) << " passed, " << count(CheckStatus::kFail) << " failed, "
      << count(CheckStatus::kSkip) << " skipped\n";
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const CheckRow& r : rows) {
    j["rows"].push_back({{"graph", r.graph}, {"check", r.check}, {"status", to_string(r.status)}, {"detail", r.detail}});
  }
  j["passed"] = count(CheckStatus::kPass);
  j["failed"] = count(CheckStatus::kFail);
  j["skipped"] = count(CheckStatus::kSkip);
  return j.dump(2);
}

std::vector<CheckRow> verify_graph(const std::string& name, const Graph& g, const VerifyOptions& options) {
  RowSink sink(name);
  const std::size_t n = g.vertex_count();
  if (n < 2) {
    sink.skip("all", "single vertex");
    return sink.take();
  }
  const auto& d = g.distances();

  // Curvature per edge, each optimum certified on its own.
  std::vector<EdgeData> edges;
  sink.check("curvature certificates", [&]() -> std::optional<std::string> {
    for (const Edge& e : g.edges()) {
      LipschitzLP lp = build_lipschitz_lp(g, e.u, e.v);
      CurvatureValue cv = solve_lipschitz_lp(g, lp);
      if (!optimizer_is_feasible(g, lp, cv)) return edge_text(e.u, e.v) + ": optimum infeasible";
      if (!min_extension_is_lipschitz(g, cv)) return edge_text(e.u, e.v) + ": extension not 1-Lipschitz";
      edges.push_back({e.u, e.v, cv.value});
    }
    return std::nullopt;
  });
  if (edges.size() != g.edge_count()) return sink.take();
  Rational kappa_min = edges.front().kappa;
  bool kappa_constant = true;
  for (const EdgeData& e : edges) {
    kappa_min = std::min(kappa_min, e.kappa);
    kappa_constant = kappa_constant && e.kappa == edges.front().kappa;
  }

  sink.check("curvature symmetric in the edge", [&]() -> std::optional<std::string> {
    for (const EdgeData& e : edges) {
      if (edge_curvature(g, e.y, e.x).value != e.kappa) return edge_text(e.y, e.x);
    }
    return std::nullopt;
  });

  {
    std::vector<const EdgeData*> small;
    for (const EdgeData& e : edges) {
      if (set_union(ball(g, e.x, 1), ball(g, e.y, 1)).size() <= options.max_lp_support) small.push_back(&e);
    }
    if (small.empty()) {
      sink.skip("LP oracle equivalence", "every support exceeds " + std::to_string(options.max_lp_support));
    } else {
      sink.check("LP oracle equivalence", [&]() -> std::optional<std::string> {
        for (const EdgeData* e : small) {
          const Rational o = brute_force_curvature_oracle(g, e->x, e->y, options.max_lp_support);
          if (o != e->kappa) {
            return edge_text(e->x, e->y) + ": simplex " + e->kappa.to_string() + ", oracle " + o.to_string();
          }
        }
        return std::nullopt;
      });
    }
  }

  sink.check("triangles and matching at curvature", [&]() -> std::optional<std::string> {
    for (const EdgeData& e : edges) {
      for (auto [a, b] : {std::pair{e.x, e.y}, std::pair{e.y, e.x}}) {
        CheckResult c = triangle_matching_check(g, a, b, e.kappa);
        if (!c.ok) return edge_text(a, b) + ": " + c.note;
      }
    }
    return std::nullopt;
  });

  std::optional<ClassificationReport> report;
  sink.check("classification", [&]() -> std::optional<std::string> {
    report = classify(g, options.tol);
    if (report->kappa_min != kappa_min || report->kappa_constant != kappa_constant) {
      return "classify disagrees with the certified curvatures";
    }
    return std::nullopt;
  });
  if (!report) return sink.take();
  for (const auto& [vname, v] : report->theorem_verdicts) {
    sink.check(vname, [&]() -> std::optional<std::string> {
      if (v.pass) return std::nullopt;
      return v.witness;
    });
  }
  const bool reflective = report->reflective;
  const bool locally_connected = report->graph_summary.locally_connected;
  const bool sharp = report->eff_bm_sharp;

  sink.check("distance regularity recount", [&]() -> std::optional<std::string> {
    const auto a = report->distance_regular;
    const auto b = distance_regularity_recount(g);
    if (a != b) return "the two counts disagree";
    if (a && !a->valid()) return "array " + a->to_string() + " violates b_i + c_i <= b_0";
    return std::nullopt;
  });

  sink.check("factorization round trip", [&]() -> std::optional<std::string> {
    std::vector<Graph> factors = factorize(g);
    Graph rebuilt = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) rebuilt = cartesian_product(rebuilt, factors[i]);
    auto phi = are_isomorphic(rebuilt, g);
    if (!phi || !is_isomorphism(rebuilt, g, *phi)) return "product of factors is not isomorphic to the graph";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].vertex_count() < 2 || !is_prime(factors[i])) return "factor " + std::to_string(i) + " not prime";
    }
    if (is_prime(g) != (factors.size() == 1)) return "is_prime disagrees with the factor count";
    return std::nullopt;
  });

  const std::string lc_reflective = "needs a locally connected reflective graph";
  if (reflective && locally_connected) {
    sink.check("curvature from intersection array", [&]() -> std::optional<std::string> {
      if (!report->distance_regular) return "not distance regular";
      const Rational k = curvature_from_intersection_array(*report->distance_regular);
      for (const EdgeData& e : edges) {
        if (e.kappa != k) return edge_text(e.x, e.y) + ": " + e.kappa.to_string() + " vs " + k.to_string();
      }
      return std::nullopt;
    });
    sink.check("Lichnerowicz and theta", [&]() -> std::optional<std::string> {
      if (!report->distance_regular) return "not distance regular";
      if (std::abs(report->lambda - kappa_min.to_double()) > options.tol) return "lambda differs from kappa";
      ThetaReport th = theta_condition(g, *report->distance_regular, options.tol);
      if (!th.holds) return "theta " + std::to_string(th.theta) + " vs b1-1 = " + std::to_string(th.b1_minus_1);
      if (!th.identity_holds) return "theta != b0 - lambda";
      return std::nullopt;
    });
  } else {
    sink.skip("curvature from intersection array", lc_reflective);
    sink.skip("Lichnerowicz and theta", lc_reflective);
  }

  std::optional<ReflectionTable> table;
  if (reflective) {
    sink.check("reflection axioms", [&]() -> std::optional<std::string> {
      table.emplace(g);
      for (const Edge& e : g.edges()) {
        auto phi = table->phi(e.u, e.v);
        if (!is_automorphism(g, phi) || !is_involution(phi) || !cross_edges_match(g, e.u, e.v, phi) ||
            !fixes_middle(g, e.u, e.v, phi) || phi[e.u] != e.v) {
          return edge_text(e.u, e.v);
        }
      }
      return std::nullopt;
    });
  }
  if (table) {
    const ReflectionTable& t = *table;
    sink.check("V_x^y convex and reflective", [&]() -> std::optional<std::string> {
      for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          CheckResult c = vxy_check(t, a, b);
          if (!c.ok) return edge_text(a, b) + ": " + c.note;
        }
      }
      return std::nullopt;
    });
    sink.check("neighbourhoods isometric", [&]() -> std::optional<std::string> {
      CheckResult c = neighbourhood_isometry_check(g);
      if (!c.ok) return c.note;
      return std::nullopt;
    });
    sink.check("parallel edge in every unit ball", [&]() -> std::optional<std::string> {
      for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          for (Vertex z = 0; z < n; ++z) {
            auto [a2, b2] = parallel_in_ball(t, a, b, z);
            if (d(z, a2) > 1 || d(z, b2) > 1 || !are_parallel(g, a, b, a2, b2)) {
              return edge_text(a, b) + ", vertex " + std::to_string(z);
            }
          }
        }
      }
      return std::nullopt;
    });
    sink.check("parallel gradient identity", [&]() -> std::optional<std::string> {
      for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          for (const Edge& f : g.edges()) {
            for (auto [a2, b2] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
              if (are_parallel(g, a, b, a2, b2) && !parallel_gradient_identity(g, a, b, a2, b2)) {
                return edge_text(a, b) + " || " + edge_text(a2, b2);
              }
            }
          }
        }
      }
      return std::nullopt;
    });
    if (locally_connected) {
      sink.check("distance transitive", [&]() -> std::optional<std::string> {
        OrbitCertificate c = pair_orbit_certificate(t);
        if (c.distance_transitive) return std::nullopt;
        return std::to_string(c.orbit_count) + " pair orbits for diameter " + std::to_string(c.diameter);
      });
    } else {
      sink.skip("distance transitive", lc_reflective);
    }
  } else {
    const std::string why = reflective ? "reflection table failed" : "not reflective";
    for (const char* c : {"V_x^y convex and reflective", "neighbourhoods isometric", "parallel edge in every unit ball",
                          "parallel gradient identity", "distance transitive"}) {
      sink.skip(c, why);
    }
  }

  if (sharp) {
    sink.check("side matching structure", [&]() -> std::optional<std::string> {
      for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          CheckResult c = matching_structure_check(g, a, b, kappa_min);
          if (!c.ok) return edge_text(a, b) + ": " + c.note;
        }
      }
      return std::nullopt;
    });
    sink.check("distance eigenfunction", [&]() -> std::optional<std::string> {
      for (Vertex x = 0; x < n; ++x) {
        CheckResult c = distance_eigenfunction_check(g, x, kappa_min);
        if (!c.ok) return "vertex " + std::to_string(x) + ": " + c.note;
      }
      return std::nullopt;
    });
  } else {
    sink.skip("side matching structure", "not effective Bonnet-Myers sharp");
    sink.skip("distance eigenfunction", "not effective Bonnet-Myers sharp");
  }

  if (n <= 10) {
    sink.check("Gamma forms match symbolic expansion", [&]() -> std::optional<std::string> {
      for (Vertex x = 0; x < n; ++x) {
        for (int i : {1, 2}) {
          if (!local_form_matches_symbolic(g, x, i)) {
            return "vertex " + std::to_string(x) + ", Gamma_" + std::to_string(i);
          }
        }
      }
      return std::nullopt;
    });
  } else {
    sink.skip("Gamma forms match symbolic expansion", "more than 10 vertices");
  }

  const bool hypercube = is_hypercube(g);
  std::optional<BeBoundReport> be;
  try {
    be = be_effective_bound_report(g, options.tol);
  } catch (const NonpositiveCurvatureError&) {
  }
  if (be) {
    sink.check("Bakry-Emery bound and rigidity", [&]() -> std::optional<std::string> {
      if (!be->holds) return "diam_eff exceeds max degree / K_min";
      if (be->equality != hypercube) {
        return std::string(hypercube ? "hypercube without" : "non-hypercube with") + " equality";
      }
      return std::nullopt;
    });
  } else {
    sink.skip("Bakry-Emery bound and rigidity", "Bakry-Emery curvature not positive");
  }
  if (hypercube) {
    sink.check("Bakry-Emery curvature 2 on hypercube", [&]() -> std::optional<std::string> {
      for (Vertex x = 0; x < n; ++x) {
        if (std::abs(bakry_emery_curvature(g, x) - 2) > 1e-6) return "vertex " + std::to_string(x);
      }
      return std::nullopt;
    });
  }
  return sink.take();
}

VerifyReport verify_theorems(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  std::vector<std::vector<CheckRow>> per_graph(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        per_graph[i] = verify_graph(corpus[i].name, corpus[i].build(), options);
      } catch (const std::exception& e) {
        per_graph[i] = {{corpus[i].name, "build", CheckStatus::kFail, e.what()}};
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  VerifyReport report;
  for (auto& rows : per_graph) {
    for (auto& r : rows) report.rows.push_back(std::move(r));
  }
  return report;
}

}  // namespace rcurv
