#include "rcurv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcurv/bakry_emery.hpp"
#include "rcurv/classify.hpp"
#include "rcurv/errors.hpp"
#include "rcurv/factorization.hpp"
#include "rcurv/families.hpp"
#include "rcurv/ollivier.hpp"
#include "rcurv/reflective.hpp"
#include "rcurv/spectral.hpp"
#include "rcurv/verify.hpp"

namespace rcurv {
namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json rational_json(const Rational& r) {
  return {{"num", integer_json(r.numerator())}, {"den", integer_json(r.denominator())}};
}

json array_json(const std::optional<IntersectionArray>& ia) {
  if (!ia) return nullptr;
  return {{"b", ia->b}, {"c", ia->c}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Output {
  int code = kExitOk;
  json j = json::object();
  std::ostringstream text;
};

std::size_t max_degree(const Graph& g) {
  std::size_t m = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m = std::max(m, g.degree(v));
  return m;
}

void cmd_info(const Graph& g, Output& o) {
  std::size_t lo = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) lo = std::min(lo, g.degree(v));
  const std::size_t hi = max_degree(g);
  const LocalConnectivity lc = local_connectivity(g);
  const auto dr = is_distance_regular(g);
  const Rational de = effective_diameter(g);
  const std::string family = identify_family(g);
  o.j = {{"n", g.vertex_count()},
         {"m", g.edge_count()},
         {"min_degree", lo},
         {"max_degree", hi},
         {"regular", lo == hi},
         {"diameter", g.diameter()},
         {"diam_eff", rational_json(de)},
         {"locally_connected", lc.locally_connected},
         {"distance_regular", array_json(dr)},
         {"family", family}};
  o.text << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\ndegree " << lo << ".." << hi
         << "\ndiameter " << g.diameter() << "\neffective diameter " << de << "\nlocally connected "
         << yes(lc.locally_connected);
  if (lc.witness) o.text << " (vertex " << *lc.witness << " has a disconnected neighbourhood)";
  o.text << "\ndistance regular " << (dr ? dr->to_string() : "no") << "\nfamily " << family << '\n';
}

void cmd_curvature(const Graph& g, const CliOptions& opt, Output& o) {
  const EdgeCurvatures c = min_edge_curvature(g);
  json edges = json::array();
  std::size_t checked = 0;
  std::optional<Edge> disagreement;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kappa", rational_json(c.per_edge[i])}});
    o.text << e.u << ' ' << e.v << ' ' << c.per_edge[i] << '\n';
    if (set_union(ball(g, e.u, 1), ball(g, e.v, 1)).size() <= opt.max_lp_support) {
      ++checked;
      if (!disagreement && brute_force_curvature_oracle(g, e.u, e.v, opt.max_lp_support) != c.per_edge[i]) {
        disagreement = e;
      }
    }
  }
  o.j = {{"edges", edges},
         {"kappa_min", rational_json(c.minimum)},
         {"kappa_constant", c.is_constant},
         {"oracle_checked", checked},
         {"oracle_agrees", !disagreement}};
  o.text << "minimum " << c.minimum << " on edge " << c.min_edge.u << '-' << c.min_edge.v << "\nconstant "
         << yes(c.is_constant) << "\noracle checked " << checked << " edge(s)";
  if (disagreement) {
    o.text << ", disagrees on edge " << disagreement->u << '-' << disagreement->v;
    o.code = kExitInconsistent;
  }
  o.text << '\n';
}

void cmd_effective_diameter(const Graph& g, Output& o) {
  const Rational de = effective_diameter(g);
  const Rational kmin = min_edge_curvature(g).minimum;
  const Rational deg(static_cast<std::int64_t>(max_degree(g)));
  o.j = {{"diam_eff", rational_json(de)}, {"max_degree", max_degree(g)}, {"kappa_min", rational_json(kmin)}};
  o.text << "effective diameter " << de << "\nmax degree " << max_degree(g) << "\nkappa_min " << kmin << '\n';
  if (kmin > Rational(0)) {
    const Rational bound = deg / kmin;
    const bool sharp = de * kmin == deg;
    o.j["bound"] = rational_json(bound);
    o.j["eff_bm_sharp"] = sharp;
    o.text << "bound max degree / kappa_min = " << bound << "\neffective Bonnet-Myers sharp " << yes(sharp) << '\n';
    if (de > bound) {
      o.text << "bound violated\n";
      o.code = kExitInconsistent;
    }
  } else {
    o.j["bound"] = nullptr;
    o.j["eff_bm_sharp"] = false;
    o.text << "no bound: kappa_min is not positive\n";
  }
}

void cmd_reflective(const Graph& g, Output& o) {
  const ReflectiveVerdict v = is_reflective(g);
  o.j = {{"reflective", v.reflective}, {"counterexample", nullptr}, {"failed_axiom", nullptr}};
  if (v.reflective) {
    o.text << "reflective\n";
    return;
  }
  o.code = kExitPropertyFailed;
  o.j["counterexample"] = {v.counterexample->u, v.counterexample->v};
  o.j["failed_axiom"] = to_string(v.failed);
  o.text << "not reflective: edge " << v.counterexample->u << '-' << v.counterexample->v << " ("
         << to_string(v.failed) << ")\n";
}

void cmd_spectrum(const Graph& g, const CliOptions& opt, Output& o) {
  const Spectrum lap = laplacian_spectrum(g);
  const Spectrum adj = adjacency_spectrum(g);
  auto mult_json = [](const Spectrum& s) {
    json a = json::array();
    for (auto [v, m] : s.multiplicities()) a.push_back({{"value", v}, {"multiplicity", m}});
    return a;
  };
  auto mult_text = [](const Spectrum& s) {
    std::string t;
    for (auto [v, m] : s.multiplicities()) t += " " + num(v) + (m > 1 ? "^" + std::to_string(m) : "");
    return t;
  };
  const LichnerowiczReport lich = is_lichnerowicz_sharp(g, opt.tol);
  const auto dr = is_distance_regular(g);
  o.j = {{"laplacian", mult_json(lap)},
         {"adjacency", mult_json(adj)},
         {"lambda", lich.lambda},
         {"kappa_min", rational_json(lich.kappa_min)},
         {"lichnerowicz_sharp", lich.sharp},
         {"lichnerowicz_inequality", lich.inequality_holds},
         {"distance_regular", array_json(dr)},
         {"theta", nullptr}};
  o.text << "laplacian" << mult_text(lap) << "\nadjacency" << mult_text(adj) << "\nlambda " << num(lich.lambda)
         << "\nkappa_min " << lich.kappa_min << "\nLichnerowicz sharp " << yes(lich.sharp) << '\n';
  if (dr) {
    const ThetaReport th = theta_condition(g, *dr, opt.tol);
    o.j["theta"] = {{"theta", th.theta}, {"b1_minus_1", th.b1_minus_1}, {"holds", th.holds}};
    o.text << "distance regular " << dr->to_string() << "\ntheta " << num(th.theta) << " (b1 - 1 = " << th.b1_minus_1
           << ")\n";
  } else {
    o.text << "distance regular no\n";
  }
  if (!lich.inequality_holds) {
    o.text << "Lichnerowicz inequality violated\n";
    o.code = kExitInconsistent;
  }
}

void cmd_factorize(const Graph& g, Output& o) {
  const std::vector<Graph> factors = factorize(g);
  json fs = json::array();
  o.text << (factors.size() == 1 ? "prime\n" : std::to_string(factors.size()) + " factors\n");
  for (const Graph& f : factors) {
    json edges = json::array();
    for (const Edge& e : f.edges()) edges.push_back({e.u, e.v});
    const std::string family = identify_family(f);
    fs.push_back({{"n", f.vertex_count()}, {"m", f.edge_count()}, {"family", family}, {"edges", edges}});
    o.text << "  " << family << ": " << f.vertex_count() << " vertices, " << f.edge_count() << " edges\n";
  }
  o.j = {{"prime", factors.size() == 1}, {"factors", fs}};
}

void cmd_bakry_emery(const Graph& g, const CliOptions& opt, Output& o) {
  json per = json::array();
  double kmin = std::numeric_limits<double>::infinity();
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const double k = bakry_emery_curvature(g, x);
    per.push_back(k);
    kmin = std::min(kmin, k);
    o.text << x << ' ' << num(k) << '\n';
  }
  const bool cube = is_hypercube(g);
  o.j = {{"per_vertex", per}, {"k_min", kmin}, {"hypercube", cube}, {"bound", nullptr}};
  o.text << "minimum " << num(kmin) << "\nhypercube " << yes(cube) << '\n';
  if (kmin <= opt.tol) {
    o.text << "no bound: curvature is not positive\n";
    return;
  }
  const BeBoundReport r = be_effective_bound_report(g, opt.tol);
  o.j["bound"] = {{"diam_eff", rational_json(r.diam_eff)},
                  {"max_degree_over_k_min", r.bound},
                  {"holds", r.holds},
                  {"equality", r.equality}};
  if (r.k_snapped) o.j["k_min_rational"] = rational_json(*r.k_snapped);
  o.text << "effective diameter " << r.diam_eff << " against max degree / K_min = " << num(r.bound)
         << "\nequality " << yes(r.equality) << '\n';
  if (!r.holds || r.equality != cube) {
    o.text << "rigidity violated\n";
    o.code = kExitInconsistent;
  }
}

void cmd_classify(const Graph& g, const CliOptions& opt, Output& o) {
  const ClassificationReport r = classify(g, opt.tol);
  o.j = json::parse(r.to_json());
  const auto& s = r.graph_summary;
  o.text << "vertices " << s.n << ", edges " << s.m << ", max degree " << s.max_degree
         << (s.regular ? ", regular" : "") << (s.locally_connected ? ", locally connected" : "") << '\n'
         << "kappa_min " << r.kappa_min << (r.kappa_constant ? " (constant)" : " (not constant)") << '\n'
         << "effective diameter " << r.diam_eff << '\n'
         << "effective Bonnet-Myers sharp " << yes(r.eff_bm_sharp) << '\n'
         << "reflective " << yes(r.reflective) << '\n'
         << "lambda " << num(r.lambda) << ", Lichnerowicz sharp " << yes(r.lichnerowicz_sharp) << '\n'
         << "distance regular " << (r.distance_regular ? r.distance_regular->to_string() : "no") << '\n'
         << "prime factors:";
  for (const PrimeFactor& f : r.prime_factors) o.text << ' ' << f.family;
  o.text << '\n';
  for (const auto& [name, v] : r.theorem_verdicts) {
    o.text << (v.pass ? "  PASS " : "  FAIL ") << name << (v.pass ? "" : ": " + v.witness) << '\n';
  }
  if (!r.consistent()) o.code = kExitInconsistent;
}

void cmd_verify(const CliOptions& opt, Output& o) {
  VerifyOptions vo;
  vo.tol = opt.tol;
  vo.max_lp_support = opt.max_lp_support;
  const VerifyReport r = verify_theorems(resolve_corpus(opt.corpus), vo);
  o.j = json::parse(r.to_json());
  o.text << r.table();
  if (!r.passed()) o.code = kExitInconsistent;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"info",     "curvature",   "effective-diameter",
                                                 "reflective", "spectrum",  "factorize",
                                                 "bakry-emery", "classify", "verify-theorems"};
  return names;
}

Graph parse_input(const CliOptions& options) {
  if (options.file.has_value() == options.family.has_value()) {
    throw InputError("give exactly one of --file and --family");
  }
  if (options.file) return read_edge_list_file(*options.file);
  return build_family(*options.family);
}

CommandResult run_command(const std::string& command, const CliOptions& options) {
  CommandResult res;
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    res.exit_code = kExitInputError;
    res.err = "unknown command " + command + "\n";
    return res;
  }
  Output o;
  try {
    if (!(options.tol > 0)) throw InvalidParameter("--tol must be positive");
    if (command == "verify-theorems") {
      cmd_verify(options, o);
    } else {
      const Graph g = parse_input(options);
      if (command == "info") cmd_info(g, o);
      if (command == "curvature") cmd_curvature(g, options, o);
      if (command == "effective-diameter") cmd_effective_diameter(g, o);
      if (command == "reflective") cmd_reflective(g, o);
      if (command == "spectrum") cmd_spectrum(g, options, o);
      if (command == "factorize") cmd_factorize(g, o);
      if (command == "bakry-emery") cmd_bakry_emery(g, options, o);
      if (command == "classify") cmd_classify(g, options, o);
    }
  } catch (const InputError& e) {
    res.exit_code = kExitInputError;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  } catch (const std::exception& e) {
    res.exit_code = kExitInconsistent;
    res.err = std::string("internal error: ") + e.what() + "\n";
    return res;
  }
  res.exit_code = o.code;
  res.out = options.json ? o.j.dump(2) + "\n" : o.text.str();
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ollivier curvature, reflections and effective Bonnet-Myers sharpness of graphs", "rcurv"};
  std::string command;
  CliOptions opt;
  std::string file;
  std::string family;
  app.add_option("command", command, "info | curvature | effective-diameter | reflective | spectrum | factorize | "
                                     "bakry-emery | classify | verify-theorems")
      ->required();
  auto* file_opt = app.add_option("--file", file, "edge-list file: \"n m\" then m lines \"u v\"");
  auto* family_opt = app.add_option("--family", family, "family expression, e.g. \"J 5 2\" or \"( CP 3 x K 2 )\"");
  file_opt->excludes(family_opt);
  app.add_flag("--json", opt.json, "machine-readable report");
  app.add_option("--tol", opt.tol, "floating-point tolerance")->capture_default_str();
  app.add_option("--corpus", opt.corpus, "\"standard\" or a corpus file (verify-theorems)")->capture_default_str();
  app.add_option("--max-lp-support", opt.max_lp_support, "largest support checked by the brute-force oracle")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }
  if (file_opt->count() > 0) opt.file = file;
  if (family_opt->count() > 0) opt.family = family;
  const CommandResult r = run_command(command, opt);
  out << r.out;
  err << r.err;
  return r.exit_code;
}

}  // namespace rcurv
