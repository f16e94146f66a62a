#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sgr/types.hpp"

namespace sgr::cli {

struct RunConfig {
  std::string command;  // embed | enhance | eval-cluster | eval-classify | describe | selftest

  std::string edges, attrs, labels, out;
  std::string embeddings;  // prior embedding file (enhance, eval-*, describe)
  std::string dump_b;      // optional "i<TAB>j<TAB>value" dump of B

  Index dim = 64;
  int order = 4;
  int negatives = 1;
  MotifWeights deltas;
  SideWeights lambdas;
  bool weighted_motifs = false;
  Index size_cap = 20000;
  int iterations = 1;

  int repeats = 100;
  std::uint64_t seed = 0;
  double train_fraction = 0.1;

  int keywords = 5;       // q
  int topics = 1;         // t
  int node_clusters = 0;  // K1; 0 = number of classes
  int attr_clusters = 0;  // K2; 0 = describe attributes directly
  bool cosine_describe = false;

  bool full = false;  // selftest at acceptance sizes
};

// Parses argv and runs the command. Returns the process exit status; every
// failure prints one "error<TAB>kind<TAB>message" line to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Throws Error(kInvalidArgument) for out-of-range values.
void validate(const RunConfig& config);

}  // namespace sgr::cli
