#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcurv/graph.hpp"
#include "rcurv/intersection_array.hpp"
#include "rcurv/rational.hpp"

namespace rcurv {

// Name of g among the generated families, or "unrecognized". Parameters are
// restricted to the non-degenerate ranges (J with 2 <= k <= n/2, HQ from 4,
// H with q >= 3, Q from 2) and a graph with several names gets the first of
// CP > J > HQ > H > Q > K. Intended for prime graphs; Schläfli and Gosset
// are tried after HQ.
std::string identify_family(const Graph& g);

// CP, J, HQ, Schläfli, Gosset, or K_n (which is J(n,1)).
bool is_list_family(const std::string& name);

struct GraphSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  bool regular = false;
  bool locally_connected = false;
};

struct PrimeFactor {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string family;
  Rational kappa;  // constant curvature of the factor, or its minimum
  bool kappa_constant = false;
};

struct Verdict {
  bool pass = true;
  std::string witness;  // empty on pass
};

struct ClassificationReport {
  GraphSummary graph_summary;
  Rational kappa_min;
  bool kappa_constant = false;
  Rational diam_eff;
  bool eff_bm_sharp = false;
  bool reflective = false;
  double lambda = 0;
  bool lichnerowicz_sharp = false;
  std::optional<IntersectionArray> distance_regular;
  std::vector<PrimeFactor> prime_factors;
  std::map<std::string, Verdict> theorem_verdicts;

  bool consistent() const;
  std::string to_json() const;  // two-space indent, keys sorted
};

// Every predicate computed on its own; the equivalences between them are then
// recorded in theorem_verdicts, never used to skip a computation.
ClassificationReport classify(const Graph& g, double tol = 1e-8);

}  // namespace rcurv
