#include "sgr/synthetic.hpp"

#include <random>

namespace sgr {

int sbm_block_of(const AttributedSbmParams& params, int node) {
  return static_cast<int>(static_cast<long long>(node) * params.blocks / params.nodes);
}

AttributedGraph make_attributed_sbm(const AttributedSbmParams& params, std::uint64_t seed) {
  if (params.nodes < 2 || params.blocks < 1 || params.blocks > params.nodes ||
      params.attrs_per_block < 1)
    throw Error(ErrorKind::kInvalidArgument, "bad attributed SBM parameters");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto node_id = [](int i) { return "v" + std::to_string(i); };
  auto attr_id = [](int b, int j) { return "b" + std::to_string(b) + "_a" + std::to_string(j); };

  std::vector<EdgeRecord> edges;
  std::vector<char> has_edge(params.nodes, 0);
  for (int i = 0; i < params.nodes; ++i)
    for (int j = i + 1; j < params.nodes; ++j) {
      const bool same = sbm_block_of(params, i) == sbm_block_of(params, j);
      if (uniform() < (same ? params.p_in : params.p_out)) {
        edges.push_back({node_id(i), node_id(j)});
        has_edge[i] = has_edge[j] = 1;
      }
    }

  std::vector<AttrRecord> attrs;
  std::vector<LabelRecord> labels;
  for (int i = 0; i < params.nodes; ++i) {
    const int b = sbm_block_of(params, i);
    bool any = false;
    for (int j = 0; j < params.attrs_per_block; ++j)
      if (uniform() < params.attr_prob) {
        attrs.push_back({node_id(i), attr_id(b, j), 1.0});
        any = true;
      }
    if (!any && !has_edge[i])
      attrs.push_back({node_id(i), attr_id(b, static_cast<int>(rng() % params.attrs_per_block)), 1.0});
    labels.push_back({node_id(i), std::to_string(b)});
  }
  return build_graph(edges, attrs, labels);
}

}  // namespace sgr
