#pragma once

#include "sgr/embed.hpp"
#include "sgr/graph_io.hpp"
#include "sgr/types.hpp"

namespace sgr {

// A_ij - d_i d_j / (2e). Throws for a graph without edges.
Matrix modularity_matrix(const AttributedGraph& g);

// Cosine similarity between rows of R0 (n x n). Zero rows are similar to
// nothing, themselves included.
Matrix attribute_cosine(const Matrix& r0);

// D_T - T
Matrix laplacian(const Matrix& t);

// Normalized side-information matrices and the combined Laplacian
// L = lambda1 (D1 - T1) + lambda2 (D2 - T2), where T1 and T2 pad the n x n
// community and attribute-similarity blocks into (n+m) x (n+m).
struct SideInfo {
  Matrix q_norm;  // n x n
  Matrix s_norm;  // n x n
  SideWeights lambdas;
  Index num_nodes = 0;
  Index num_attrs = 0;
  Matrix l;  // (n+m) x (n+m)

  Index size() const { return num_nodes + num_attrs; }
  Matrix t1() const;
  Matrix t2() const;
};

// `num_attrs` is the attribute row count of the model to be enhanced; pass
// g.num_attrs() unless the attributes were left out of G'.
SideInfo build_side_info(const AttributedGraph& g, SideWeights lambdas);
SideInfo build_side_info(const AttributedGraph& g, SideWeights lambdas, Index num_attrs);

// 1/2 sum_ij T_ij ||X_i - X_j||^2 for symmetric T.
double regularization_value(const Matrix& x, const Matrix& t);

// ||Z - X Y^T||_F^2 + tr(X^T L X)
double enhanced_objective(const Matrix& z, const Matrix& x, const Matrix& y, const Matrix& l);

// Partial derivatives of enhanced_objective.
Matrix objective_gradient_x(const Matrix& z, const Matrix& x, const Matrix& y, const Matrix& l);
Matrix objective_gradient_y(const Matrix& z, const Matrix& x, const Matrix& y);

inline constexpr double kPinvTolerance = 1e-12;

// SVD pseudo-inverse; singular values below tol * max are treated as zero.
Matrix pseudo_inverse(const Matrix& m, double tol = kPinvTolerance);

// X' = (I + L)^+ Z Y (Y^T Y + I_k)^+
Matrix update_x(const Matrix& z, const Matrix& y, const Matrix& l);

// Y' = Z^T X (X^T X)^+
Matrix update_y(const Matrix& z, const Matrix& x);

// X = Z Y (Y^T Y)^+, the unregularized least-squares solution for X.
Matrix least_squares_x(const Matrix& z, const Matrix& y);

struct EnhanceResult {
  EmbeddingModel model;
  double objective_before = 0.0;
  double objective_after = 0.0;
};

// Starts from (model.x, model.y) and applies update_x then update_y
// `iterations` times (one pass by default).
EnhanceResult side_enhance(const EmbeddingModel& model, const WalkMatrix& walk,
                           const SideInfo& side, int iterations = 1);

}  // namespace sgr
