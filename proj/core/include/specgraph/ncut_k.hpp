#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// N×K matrix representing a partition: column j equals a_j on block j and
/// 0 elsewhere, with every a_j ≠ 0.
struct PartitionMatrix {
    Matrix x;
    Vector scales;                    ///< a_1 … a_K
    std::vector<std::size_t> labels;  ///< labels[i] = column holding row i's nonzero

    std::size_t clusters() const noexcept { return static_cast<std::size_t>(x.cols()); }
    Partition partition() const;
};

enum class PartitionScaling {
    InverseSqrtVolume,  ///< a_j = 1/√vol(A_j), so XᵀDX = I
    Unit,               ///< a_j = 1, so X·1_K = 1_N
};

/// Block j of `p` becomes column j. Throws IsolatedVertexError for a
/// zero-volume block under InverseSqrtVolume scaling.
PartitionMatrix partition_matrix(const WeightedGraph& g, const Partition& p,
                                 PartitionScaling scaling = PartitionScaling::InverseSqrtVolume);

/// Independent checks of the conditions characterizing partition matrices.
struct PartitionMatrixReport {
    bool columns_nonzero = false;
    bool columns_two_valued = false;  ///< nonzeros of each column equal and share a sign
    bool rows_nonzero = false;        ///< det(DIAG(XXᵀ)) ≠ 0
    double rows_nonzero_det = 0.0;
    bool columns_orthogonal = false;  ///< (X^i)ᵀX^j = 0 for i ≠ j
    double columns_orthogonal_residual = 0.0;
    bool d_orthogonal = false;        ///< (X^i)ᵀD X^j = 0 for i ≠ j
    double d_orthogonal_residual = 0.0;
    bool projector_fixes_ones = false;  ///< X(XᵀX)^{-1}Xᵀ1 = 1; false when XᵀX is singular
    double projector_residual = 0.0;
    bool rows_sum_to_one = false;       ///< X·1_K = 1_N
    double rows_sum_residual = 0.0;

    /// Everything needed for X to represent a partition into K blocks.
    bool valid() const {
        return columns_nonzero && columns_two_valued && rows_nonzero && columns_orthogonal && d_orthogonal &&
               projector_fixes_ones;
    }
};

PartitionMatrixReport validate_partition_matrix(const Matrix& x, const Vector& degrees, double tol = 1e-8);

/// Σ_j (X^j)ᵀLX^j / (X^j)ᵀDX^j. Throws InvalidArgument for a zero column.
double mu(const WeightedGraph& g, const Matrix& x);
/// K − μ(X).
double epsilon(const WeightedGraph& g, const Matrix& x);
/// tr(Λ^{−1/2} XᵀLX Λ^{−1/2}) with Λ = diag(XᵀDX). Throws PreconditionError
/// when Λ is singular.
double mu_trace_form(const WeightedGraph& g, const Matrix& x);

/// Continuous K-way solution.
struct KWayRelaxed {
    Matrix y;      ///< K unit eigenvectors of L_sym, smallest eigenvalues first; YᵀY = I
    Matrix z0;     ///< D^{−1/2}Y, so Z0ᵀDZ0 = I
    /// Z0·H column-rescaled so that Z·1_K is closest to 1_N, where the
    /// reflection H spreads the weights evenly over the K columns. Rescaling
    /// Z0 directly would zero every column but the first, since Z0's first
    /// column is constant.
    Matrix z;
    Vector nu;     ///< ν_1 ≤ … ≤ ν_K
    double trace_value = 0.0;  ///< ν_1 + … + ν_K
};

/// Throws PreconditionError for a disconnected graph or K outside [2, N).
KWayRelaxed relax_k(const WeightedGraph& g, std::size_t k);

/// Z·R where ZᵀZ = RΣRᵀ, so the result has orthogonal columns.
/// Throws PreconditionError if Z is rank deficient.
Matrix orthogonalize_columns(const Matrix& z);

/// λ = (Z0ᵀZ0)^{−1}Z0ᵀ1_N, the least-squares weights with Z0·λ ≈ 1_N.
Vector rescale_weights(const Matrix& z0);
/// Z0·diag(λ). Throws PreconditionError if Z0 is rank deficient.
Matrix rescale_columns(const Matrix& z0);

/// Orthogonal R minimizing ‖X − ZR‖_F: R = UVᵀ for UΣVᵀ = ZᵀX.
Matrix pod_r(const Matrix& z, const Matrix& x);

enum class EmptyColumnRepair {
    /// Fill each empty column with the row that scores highest in it among
    /// rows whose column has at least two members.
    Reassign,
    /// Drop empty columns and continue with fewer clusters.
    Shrink,
};

struct PodXResult {
    PartitionMatrix x;
    /// Columns of Y that survive (all of them unless Shrink dropped some).
    std::vector<std::size_t> kept_columns;
    bool shrunk = false;
    std::size_t reassigned_rows = 0;
};

/// Discrete step: each row goes to the column where Y is largest (ties to the
/// lowest column), empty columns are repaired, and column j is scaled to
/// norm rho[j].
PodXResult pod_x(const Matrix& y, const Vector& rho, EmptyColumnRepair repair = EmptyColumnRepair::Reassign);

/// Starting rotation from K rows of Z that are nearly orthogonal, found
/// greedily and then orthonormalized. Throws PreconditionError when Z has
/// rank below K.
Matrix init_rotation(const Matrix& z);

/// Orthogonal K×K matrix whose first column is (√α_1, …, √α_K)/√d, the rest
/// from Gram–Schmidt on e_2, …, e_K.
Matrix canonical_rotation(const Vector& alphas);

struct ClusterOptions {
    /// Use the column-rescaled Z instead of Z0.
    bool rescale = false;
    /// Scale the discrete columns to the norms of ZR's columns.
    bool normalize_columns = true;
    EmptyColumnRepair repair = EmptyColumnRepair::Reassign;
    double tol = 1e-10;
    int max_iter = 100;
};

enum class StepKind { PodX, PodR };

struct AlternationStep {
    StepKind kind = StepKind::PodX;
    double objective = 0.0;  ///< ‖X − ZR‖_F after the step
    double ncut = 0.0;       ///< normalized cut of the current partition
    std::size_t clusters = 0;
    bool shrunk = false;     ///< the step dropped a column
};

struct ClusterResult {
    Partition partition;
    PartitionMatrix x;
    KWayRelaxed relaxed;
    Matrix z;         ///< the matrix the alternation ran on (after any shrinking)
    Matrix rotation;  ///< final R
    Matrix initial_rotation;
    std::vector<AlternationStep> trace;
    double objective = 0.0;
    double ncut = 0.0;
    int iterations = 0;
    bool converged = false;
    /// Set when a PODX step would have increased the objective; the previous
    /// pair was kept.
    bool stopped_on_increase = false;
};

/// Full pipeline: relax, pick Z, initialize R, then alternate PODX and PODR
/// until the objective improves by less than `tol` or `max_iter` rounds.
ClusterResult cluster(const WeightedGraph& g, std::size_t k, const ClusterOptions& options = {});

std::string to_string(StepKind kind);

}  // namespace specgraph
