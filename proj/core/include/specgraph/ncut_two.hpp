#pragma once

#include <span>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Scaling of the two indicator values for a bipartition (A, Ā), with
/// α = vol(A) and d = vol(V).
enum class IndicatorConvention {
    VonLuxburg,    ///< a = √((d−α)/α), b = −√(α/(d−α)); XᵀDX = d
    ShiMalik,      ///< a = 1, b = −k/(1−k) with k = α/d
    BelkinNiyogi,  ///< a = 1/α, b = −1/(d−α)
};

/// x_i = a for i ∈ A and b otherwise.
struct TwoWayIndicator {
    Vector x;
    double a = 0.0;
    double b = 0.0;
    std::vector<bool> membership;  ///< true ⇔ x_i = a

    /// Builds an indicator with arbitrary values; requires a ≠ 0, b ≠ 0 and
    /// both values present.
    static TwoWayIndicator from_values(const std::vector<bool>& membership, double a, double b);

    /// The same bipartition with both values multiplied by `factor` ≠ 0.
    TwoWayIndicator scaled(double factor) const;

    NodeSet side_a() const;
};

/// Throws InvalidArgument when A is empty or everything, and
/// IsolatedVertexError when either side has zero volume.
TwoWayIndicator make_indicator(const WeightedGraph& g, std::span<const std::size_t> a,
                               IndicatorConvention convention = IndicatorConvention::VonLuxburg);

/// aα + b(d − α) = 0 within 1e−10 · d · max(|a|, |b|), i.e. XᵀD1 ≈ 0.
bool check_dagger(const WeightedGraph& g, const TwoWayIndicator& ind);

/// XᵀLX / XᵀDX. Equals Ncut(A, Ā) exactly when the indicator balances;
/// throws PreconditionError otherwise.
double ncut_rayleigh(const WeightedGraph& g, const TwoWayIndicator& ind);

/// Continuous minimizer: Y is a unit eigenvector of L_sym for its second
/// eigenvalue ν₂, Z = D^{−1/2} Y.
struct RelaxedSolution {
    Vector y;
    Vector z;
    double nu2 = 0.0;
};

/// Throws PreconditionError for a disconnected graph.
RelaxedSolution relax_two(const WeightedGraph& g);

/// A = {i : z_i ≥ 0}. Throws InvalidArgument unless both sides are nonempty.
Partition sign_round(const Vector& z);

struct RoundingResult {
    TwoWayIndicator indicator;
    Partition partition;
    double distance = 0.0;          ///< ‖X − Z‖₂ for the final X
    bool flipped = false;           ///< Z was replaced by −Z
    std::vector<double> distances;  ///< after the initial fit and each accepted zero index
};

/// Closest two-valued balanced vector to Z. Fits X with values a on the
/// positive entries and −βa elsewhere by least squares, then tries moving
/// each zero entry (ascending) into the positive side and keeps the move
/// when it reduces ‖X − Z‖. The partition's first block is the a-side.
RoundingResult round_two(const WeightedGraph& g, const Vector& z);

}  // namespace specgraph
