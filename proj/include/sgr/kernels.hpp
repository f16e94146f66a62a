#pragma once

#include <utility>
#include <vector>

#include "sgr/types.hpp"

// Dense data-parallel kernels shared by the pipeline stages.
//
// The functions in sgr::kernels are the OpenMP-parallel versions used in
// production. sgr::kernels::serial holds straightforward single-threaded
// loops with identical contracts; tests check the two agree and the
// benchmark target compares their throughput.
namespace sgr::kernels {

// sum_{r=1..order} P^r
Matrix power_sum(const Matrix& p, int order);

// Cosine similarity between the columns of `m`; zero columns give 0 against
// everything, themselves included.
Matrix column_cosine(const Matrix& m);

// ||points_i - centers_j||^2 for every pair.
Matrix squared_distances(const Matrix& points, const Matrix& centers);

// Index of the nearest center for each point (lowest index on ties) and the
// squared distance to it.
std::pair<std::vector<int>, Vector> nearest_centers(const Matrix& points, const Matrix& centers);

// Motif instance counts for R0's support. Entry (i, w) of the first matrix
// counts the nodes j != i sharing attribute w with i; the second counts the
// attributes s != w held by node i. Both are zero where R0(i, w) == 0. With
// `weighted`, each count is scaled by R0(i, w).
std::pair<Matrix, Matrix> motif_counts(const Matrix& r0, bool weighted);

// 1/2 * sum_{i,j} T(i,j) * ||X_i - X_j||^2
double pairwise_penalty(const Matrix& x, const Matrix& t);

namespace serial {

Matrix power_sum(const Matrix& p, int order);
Matrix column_cosine(const Matrix& m);
Matrix squared_distances(const Matrix& points, const Matrix& centers);
std::pair<std::vector<int>, Vector> nearest_centers(const Matrix& points, const Matrix& centers);
std::pair<Matrix, Matrix> motif_counts(const Matrix& r0, bool weighted);
double pairwise_penalty(const Matrix& x, const Matrix& t);

}  // namespace serial

}  // namespace sgr::kernels
