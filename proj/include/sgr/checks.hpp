#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgr/graph_io.hpp"

// Verification suites shared by the acceptance binary and `sgr selftest`.
// Each compares the library against the brute-force oracles or against an
// algebraic identity and reports the worst deviation seen.
namespace sgr::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  double worst = 0.0;  // largest observed deviation (or the measured margin)
  double limit = 0.0;  // tolerance it was held to
  double seconds = 0.0;
  std::string detail;
};

// "PASS <name> worst=<..> limit=<..> (<s>s) <detail>"
std::string format_result(const CheckResult& r);

struct CheckSizes {
  int walk_graphs = 200;
  int motif_samples = 200;
  int factor_samples = 30;
  int structural_graphs = 100;
  int gradient_instances = 50;
  int update_instances = 50;
  int metric_samples = 200;
  int planted_seeds = 20;
  int planted_repeats = 10;
  int semantic_seeds = 10;
  std::uint64_t seed = 20240601;
};

// Reduced counts for a quick interactive run.
CheckSizes quick_sizes();

// Random connected attributed graph with every attribute in use.
AttributedGraph random_attributed_graph(std::uint64_t seed, int max_nodes, int max_attrs,
                                        bool weighted);

CheckResult walk_oracle(const CheckSizes& s);
CheckResult motif_oracle(const CheckSizes& s);
CheckResult factorization(const CheckSizes& s);
CheckResult structural_identities(const CheckSizes& s);
CheckResult gradient_checks(const CheckSizes& s);
CheckResult update_optimality(const CheckSizes& s);
CheckResult metric_sanity(const CheckSizes& s);
CheckResult planted_reproduction(const CheckSizes& s);
CheckResult semantic_fidelity(const CheckSizes& s);
// Runs only when SGR_CORA_DIR points at edges.tsv/attrs.tsv/labels.tsv.
CheckResult cora_reference(const CheckSizes& s);

std::vector<CheckResult> run_all(const CheckSizes& s, bool include_optional);

}  // namespace sgr::checks
