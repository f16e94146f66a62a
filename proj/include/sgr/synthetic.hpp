#pragma once

#include <cstdint>

#include "sgr/graph_io.hpp"

namespace sgr {

// Planted-partition graph whose blocks also own disjoint attribute sets.
struct AttributedSbmParams {
  int nodes = 200;
  int blocks = 4;
  double p_in = 0.10;
  double p_out = 0.02;
  int attrs_per_block = 10;
  double attr_prob = 0.5;  // chance a node carries each of its block's attributes
};

// Node i belongs to block i * blocks / nodes and is labeled with it. Node
// ids are "v<i>", attribute ids "b<block>_a<j>". A node drawn with neither
// edges nor attributes receives one attribute of its block.
AttributedGraph make_attributed_sbm(const AttributedSbmParams& params, std::uint64_t seed);

int sbm_block_of(const AttributedSbmParams& params, int node);

}  // namespace sgr
