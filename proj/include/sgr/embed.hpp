#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sgr/aux_graph.hpp"
#include "sgr/types.hpp"

namespace sgr {

// Log-transformed multi-step random-walk proximity of G'.
struct WalkMatrix {
  Matrix z;        // (n+m) x (n+m), entries >= 0
  Vector degrees;  // row sums of B
  double volume = 0.0;
  Index num_nodes = 0;
  int order = 1;
  int negatives = 1;
};

// vol(G') / (order * negatives) * (sum_{r=1..order} (D^-1 B)^r) D^-1, before the log.
Matrix walk_proximity(const HeteroAdjacency& b, int order, int negatives);

// Z = log(max(M, 1)) with M from walk_proximity.
WalkMatrix walk_matrix(const HeteroAdjacency& b, int order, int negatives);

// Factors X (embeddings) and Y (context) with Z ~ X Y^T.
struct EmbeddingModel {
  Matrix x;
  Matrix y;
  Vector singular_values;  // top-k, descending
  Index num_nodes = 0;
  int order = 1;
  int negatives = 1;

  Index dim() const { return x.cols(); }
  Index num_entities() const { return x.rows(); }
  Index num_attrs() const { return x.rows() - num_nodes; }
  auto node_vectors() const { return x.topRows(num_nodes); }
  auto attr_vectors() const { return x.bottomRows(num_attrs()); }
};

// Rank-k truncated SVD, X = U_k sqrt(S_k), Y = V_k sqrt(S_k). Each U column is
// sign-fixed so its largest-magnitude entry is positive.
EmbeddingModel factorize(const WalkMatrix& walk, Index k);

struct EmbedParams {
  Index dim = 64;
  int order = 4;
  int negatives = 1;
  AuxGraphOptions aux;
};

// B -> Z -> X, Y. `walk_out`, when given, receives the intermediate Z.
EmbeddingModel embed(const AttributedGraph& g, const EmbedParams& params,
                     WalkMatrix* walk_out = nullptr);

void write_embeddings(const EmbeddingModel& model, const AttributedGraph& g,
                      const std::filesystem::path& path);

}  // namespace sgr
