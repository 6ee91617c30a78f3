#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

/// Vertex coordinates of a graph drawing: row i is the image of node i in
/// ℝⁿ, with n < m (number of rows).
class Drawing {
public:
    explicit Drawing(Matrix coordinates);

    std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(r_.rows()); }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(r_.cols()); }
    const Matrix& coordinates() const noexcept { return r_; }

    /// Column sums vanish (within 1e−8 · m).
    bool is_balanced() const;
    /// RᵀR = I (within 1e−8).
    bool is_orthogonal() const;

    /// Pairs of vertices whose images lie within `tol` of each other.
    std::vector<std::pair<std::size_t, std::size_t>> coincident_vertices(double tol = 1e-9) const;

private:
    Matrix r_;
};

/// Σ over edges of w_ij ‖ρ(i) − ρ(j)‖².
double energy(const WeightedGraph& g, const Drawing& r);
/// tr(Rᵀ L R).
double energy_trace(const WeightedGraph& g, const Drawing& r);
/// tr(Rᵀ D̃ Ŵ D̃ᵀ R) for an orientation of g's edge set. The orientation is
/// drawn from `seed`; the value does not depend on it.
double energy_incidence(const WeightedGraph& g, const Drawing& r, std::uint64_t seed = 0);

/// Edge weights in lexicographic edge order, the diagonal of Ŵ.
Vector edge_weight_diagonal(const WeightedGraph& g);

/// Oriented incidence matrix over all edges of a weighted graph (lexicographic
/// order, random directions from `seed`). Works for any positive weights.
Matrix oriented_incidence(const WeightedGraph& g, std::uint64_t seed = 0);

/// Minimum-energy balanced orthogonal drawing in ℝⁿ: columns are unit
/// eigenvectors u₂ … u_{n+1} of L. Throws PreconditionError for a
/// disconnected graph or n + 1 > m.
Drawing spectral_drawing(const WeightedGraph& g, std::size_t n);

/// λ₂ + … + λ_{n+1} of L.
double minimum_energy_lower_bound(const WeightedGraph& g, std::size_t n);

/// R·Q. Throws InvalidArgument unless QᵀQ = I within 1e−8.
Drawing rotate_drawing(const Drawing& r, const Matrix& q);

/// SVG 1.1 rendering of a 2-D drawing. Deterministic for identical input.
std::string to_svg(const WeightedGraph& g, const Drawing& r);

}  // namespace specgraph
