#pragma once

// Reference computations that share no code with the library: Eigen's own
// solvers, plain loops over the weight matrix, naive enumeration.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace specgraph::testing {

using Labels = std::vector<std::size_t>;

/// Ascending eigenvalues via Eigen::SelfAdjointEigenSolver.
Eigen::VectorXd reference_eigenvalues(const Eigen::MatrixXd& s);
/// Descending singular values via Eigen::JacobiSVD.
Eigen::VectorXd reference_singular_values(const Eigen::MatrixXd& a);

/// D − W from the raw weights.
Eigen::MatrixXd reference_laplacian(const Eigen::MatrixXd& w);

/// Σ_j cut(A_j)/vol(A_j) straight from W; +inf when a block has zero volume.
double reference_ncut(const Eigen::MatrixXd& w, const Labels& labels, std::size_t k);

/// Every labelling of n nodes with exactly k labels, normalized so labels
/// appear in order of first use, found by brute force over kⁿ strings.
std::vector<Labels> reference_partitions(std::size_t n, std::size_t k);

/// S(n, k) by the inclusion-exclusion formula.
std::uint64_t reference_stirling2(std::size_t n, std::size_t k);

/// Minimum 2-way Ncut over all proper bipartitions.
double reference_best_bipartition_ncut(const Eigen::MatrixXd& w);
/// Minimum cut over all proper bipartitions.
double reference_min_cut(const Eigen::MatrixXd& w);

/// ‖P_A − P_B‖_F for the orthogonal projectors onto two column spans.
double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace specgraph::testing
