#pragma once

#include <filesystem>
#include <utility>

#include "sgr/graph_io.hpp"
#include "sgr/types.hpp"

namespace sgr {

inline constexpr Index kDefaultSizeCap = 20000;

// Global max-min rescaling of all entries onto [0, 1]. A constant matrix
// (max == min) maps to all zeros. Throws on NaN/Inf.
Matrix mnorm(const Matrix& m);

// Cosine similarity between the attribute columns of R0, symmetrically
// degree-normalized and max-min rescaled: the m x m attribute block.
Matrix attribute_similarity(const Matrix& r0);

enum class MotifMode {
  kCount,     // number of motif instances containing (v_i, a_w)
  kWeighted,  // instance count scaled by R0(i, w)
};

struct MotifRelations {
  Matrix r1;  // two nodes sharing one attribute
  Matrix r2;  // one node carrying two attributes
};

MotifRelations motif_relations(const Matrix& r0, MotifMode mode = MotifMode::kCount);

// mnorm(d0 * mnorm(R0) + d1 * mnorm(R1) + d2 * mnorm(R2))
Matrix combine_relations(const Matrix& r0, const Matrix& r1, const Matrix& r2,
                         const MotifWeights& deltas);

struct AuxGraphOptions {
  MotifWeights deltas;
  MotifMode motif_mode = MotifMode::kCount;
  // Replaces the attribute-attribute block with zeros. Together with all-zero
  // deltas the attributes are disconnected from G', so they are left out and
  // B reduces to the adjacency matrix (topology-only ablation).
  bool zero_attribute_block = false;
  Index size_cap = kDefaultSizeCap;
};

// The (n+m) x (n+m) symmetric block matrix
//
//   [ A    R~ ]
//   [ R~^T P~ ]
//
// over node entities 0..n and attribute entities n..n+m.
class HeteroAdjacency {
 public:
  HeteroAdjacency(Matrix b, Index num_nodes, MotifWeights deltas)
      : b_(std::move(b)), n_(num_nodes), deltas_(deltas) {}

  const Matrix& matrix() const { return b_; }
  Index num_nodes() const { return n_; }
  Index num_attrs() const { return b_.rows() - n_; }
  Index size() const { return b_.rows(); }
  const MotifWeights& deltas() const { return deltas_; }

  auto block_a() const { return b_.topLeftCorner(n_, n_); }
  auto block_r() const { return b_.topRightCorner(n_, num_attrs()); }
  auto block_p() const { return b_.bottomRightCorner(num_attrs(), num_attrs()); }

 private:
  Matrix b_;
  Index n_;
  MotifWeights deltas_;
};

// Assembles B from a validated graph. Throws kSizeCap when n+m exceeds the
// cap and kInvalidInput naming the entity when some row of B is all zero.
HeteroAdjacency build_hetero_adjacency(const AttributedGraph& g, const AuxGraphOptions& options = {});

// Same, from explicit blocks; used by the builder and by tests.
HeteroAdjacency assemble_hetero_adjacency(const Matrix& adjacency, const Matrix& relations,
                                          const Matrix& attr_similarity, MotifWeights deltas);

// Debug dump: one "i<TAB>j<TAB>value" line per nonzero entry.
void dump_triples(const HeteroAdjacency& b, const std::filesystem::path& path);

}  // namespace sgr
