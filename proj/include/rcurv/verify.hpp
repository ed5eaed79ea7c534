#pragma once

#include <string>
#include <vector>

#include "rcurv/graph.hpp"

namespace rcurv {

struct CorpusEntry {
  std::string name;
  // Family expression, or "@path" for an edge-list file.
  std::string source;

  Graph build() const;
};

// The fixed acceptance corpus: list graphs, hypercubes, H(2,3), three
// products and the non-examples C5, C6, K3,3, Petersen and P4.
std::vector<CorpusEntry> standard_corpus();

// One entry per non-blank, non-'#' line. A relative "@path" is resolved
// against the corpus file's directory.
std::vector<CorpusEntry> read_corpus_file(const std::string& path);

// "standard" or a corpus file path.
std::vector<CorpusEntry> resolve_corpus(const std::string& spec);

enum class CheckStatus { kPass, kFail, kSkip };
std::string to_string(CheckStatus s);

struct CheckRow {
  std::string graph;
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // witness on failure, unmet precondition on skip
};

struct VerifyOptions {
  double tol = 1e-8;
  std::size_t max_lp_support = 10;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifyReport {
  std::vector<CheckRow> rows;  // corpus order

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  std::string table() const;
  std::string to_json() const;
};

// Every per-module property over every corpus graph, each gated on its own
// hypothesis; failures are report content, not exceptions. Graphs are
// analysed concurrently.
VerifyReport verify_theorems(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {});

// The rows for one graph.
std::vector<CheckRow> verify_graph(const std::string& name, const Graph& g, const VerifyOptions& options = {});

}  // namespace rcurv
