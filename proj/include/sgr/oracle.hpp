#pragma once

#include <utility>
#include <vector>

// Brute-force reference computations used to check the pipeline.
//
// Everything here is written against std::vector with explicit loops and
// shares no code with the sgr library, so agreement between the two is
// meaningful. Nothing here is tuned for speed.
namespace sgr::oracle {

using Dense = std::vector<std::vector<double>>;

Dense zeros(std::size_t rows, std::size_t cols);
Dense identity(std::size_t n);
Dense multiply(const Dense& a, const Dense& b);
Dense transpose(const Dense& a);
Dense add(const Dense& a, const Dense& b);
Dense scale(const Dense& a, double s);
double frobenius(const Dense& a);
double frobenius_distance(const Dense& a, const Dense& b);

// Gauss-Jordan inverse with partial pivoting; throws if singular.
Dense inverse(const Dense& a);

// vol * (1/order) * sum_r (D^-1 B)^r * D^-1 / negatives, each power formed
// explicitly as P * P * ... * P.
Dense walk_proximity(const Dense& b, int order, int negatives);
// log(max(M, 1)) entrywise.
Dense truncated_log(const Dense& m);

// Walks every instance of the two-leg motifs on R0's support and tallies
// each (node, attribute) leg. First: two nodes sharing an attribute. Second:
// one node holding two attributes.
std::pair<Dense, Dense> enumerate_motifs(const Dense& r0);

// Singular values, descending, by one-sided Jacobi rotations.
std::vector<double> singular_values(const Dense& a);

// Best total overlap of a one-to-one cluster/class matching by trying every
// injection. Only for tiny label counts.
double best_matching_overlap(const std::vector<int>& pred, const std::vector<int>& truth);

// Indices of the q rows of `vectors` nearest (Euclidean) to `center`, found
// by repeated linear scans; ties go to the lower index.
std::vector<std::size_t> nearest_q(const Dense& vectors, const std::vector<double>& center, std::size_t q);

// A_ij - d_i d_j / (2e)
Dense modularity(const Dense& adjacency);

// tr(X^T (D_T - T) X) from explicit loops.
double laplacian_trace(const Dense& x, const Dense& t);

}  // namespace sgr::oracle
