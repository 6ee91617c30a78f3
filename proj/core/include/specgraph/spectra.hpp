#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "specgraph/linalg.hpp"

namespace specgraph {

/// Real symmetric matrix.
///
/// Symmetry is checked entrywise on construction:
/// |S(i,j) − S(j,i)| ≤ 1e−12 · max(1, |S(i,j)|). The stored matrix is the
/// exact symmetrization ½(S + Sᵀ).
class SymMatrix {
public:
    explicit SymMatrix(const Matrix& s);

    std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    double operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

private:
    Matrix m_;
};

/// Eigenvalues in ascending order, column k of `vectors` a unit eigenvector
/// for `values[k]`.
///
/// Everything in this library indexes eigenvalues ascending (λ₁ ≤ λ₂ ≤ …),
/// so "λ₂ of L" is the smallest nonzero eigenvalue of a connected graph's
/// Laplacian. Each eigenvector is signed so its largest-magnitude entry is
/// positive (ties go to the lowest index). Within a multiple eigenvalue the
/// basis is whatever the solver produced; compare eigenspaces, not vectors.
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// A = U · diag(σ) · Vᵀ with σ descending and r = min(m, n) columns.
struct SvdResult {
    Matrix u;
    Vector singular_values;
    Matrix v;
};

struct JacobiOptions {
    /// Stop when ‖offdiag(S)‖_F ≤ tolerance · ‖S‖_F.
    double tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver. Throws ConvergenceError past `max_sweeps`.
EigenDecomposition eigh(const SymMatrix& s, const JacobiOptions& options = {});

/// One-sided (Hestenes) Jacobi SVD of an arbitrary finite matrix.
SvdResult svd(const Matrix& a, const JacobiOptions& options = {});

/// xᵀSx / xᵀx. Throws InvalidArgument for x = 0.
double rayleigh(const SymMatrix& s, const Vector& x);

/// Smallest and largest Rayleigh ratio over the column span of `basis`
/// (orthonormal columns), computed exactly as the extreme eigenvalues of
/// basisᵀ S basis.
struct RatioRange {
    double min = 0.0;
    double max = 0.0;
};
RatioRange subspace_ratio_range(const SymMatrix& s, const Matrix& basis);

struct RayleighRitzReport {
    EigenDecomposition decomposition;
    /// Largest amount by which a sampled ratio fell outside the bound the
    /// theorem predicts for its subspace (≤ 0 means no violation).
    double max_violation = 0.0;
    /// Largest |R(u_k) − λ_k| over all k (the bound is attained at u_k).
    double attainment_error = 0.0;
    std::size_t samples_checked = 0;
};

/// For each k checks: ratios on span(u_k, …, u_n) are ≥ λ_k, ratios on
/// span(u_1, …, u_k) are ≤ λ_k, and R(u_k) = λ_k. `samples` random unit
/// vectors are drawn per subspace.
RayleighRitzReport check_rayleigh_ritz(const SymMatrix& s, int samples = 32, std::uint64_t seed = 0);

struct InterlacingReport {
    bool holds = false;
    /// With A's eigenvalues λ and B = RᵀAR's eigenvalues μ, both descending:
    /// lower[i] = μ_i − λ_{n−m+i}, upper[i] = λ_i − μ_i.
    std::vector<double> lower_margins;
    std::vector<double> upper_margins;
};

/// Checks λ_{n−m+i}(A) ≤ μ_i(RᵀAR) ≤ λ_i(A) with 1e−8 slack. Requires
/// RᵀR = I within 1e−8 (PreconditionError otherwise).
InterlacingReport check_interlacing(const SymMatrix& a, const Matrix& r, double slack = 1e-8);

struct CourantFischerReport {
    double eigenvalue = 0.0;           ///< λ_k (ascending)
    double min_max_optimal = 0.0;      ///< max ratio on span(u_1..u_k)
    double max_min_optimal = 0.0;      ///< min ratio on span(u_k..u_n)
    double exact_error = 0.0;          ///< max deviation of the two optima from λ_k
    double smallest_sampled_max = 0.0; ///< over random k-dim subspaces
    double largest_sampled_min = 0.0;  ///< over random (n−k+1)-dim subspaces
    bool holds = false;
};

/// λ_k = min over k-dim W of max_W R = max over (n−k+1)-dim W of min_W R
/// (k ascending, 1-based). Evaluates the optimal subspaces exactly and
/// samples `trials` random subspaces of each dimension.
CourantFischerReport check_courant_fischer(const SymMatrix& s, std::size_t k, int trials = 64,
                                           std::uint64_t seed = 0, double slack = 1e-8);

}  // namespace specgraph
