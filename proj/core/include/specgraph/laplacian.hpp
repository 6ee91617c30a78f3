#pragma once

#include <cstddef>
#include <cstdint>

#include "specgraph/graph.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

/// L = D − W.
SymMatrix laplacian(const WeightedGraph& g);

/// L together with its two normalized forms
/// L_sym = D^{−1/2} L D^{−1/2} and L_rw = D^{−1} L.
struct LaplacianBundle {
    SymMatrix l;
    Vector degrees;
    SymMatrix l_sym;
    Matrix l_rw;  ///< not symmetric in general
};

/// Throws IsolatedVertexError naming the first node of degree 0.
LaplacianBundle normalized_laplacians(const WeightedGraph& g);

/// xᵀLx.
double quadratic_form(const SymMatrix& l, const Vector& x);

/// ½ Σ_{i,j} W(i,j)(x_i − x_j)².
double pairwise_form(const WeightedGraph& g, const Vector& x);
/// Same sum over an arbitrary square matrix. The diagonal never contributes.
double pairwise_form(const Matrix& w, const Vector& x);

/// Number of eigenvalues of L below `tol`. A negative `tol` selects the
/// default 1e−8 · max(1, λ_max).
std::size_t component_count_spectral(const WeightedGraph& g, double tol = -1.0);

/// Solutions of L u = λ D u, obtained from L_sym: u = D^{−1/2} v for each
/// unit eigenvector v of L_sym. Values ascending; u is D-orthonormal.
struct GeneralizedEigen {
    Vector values;
    Matrix vectors;
};
GeneralizedEigen generalized_eigen(const WeightedGraph& g);

struct Adjp2Report {
    bool holds = false;
    int trials = 0;
    /// Largest |(D̃D̃ᵀ − L)(i,j)| seen over all orientations.
    int max_deviation = 0;
    /// D̃D̃ᵀ for the unoriented incidence matrix equals D + A.
    bool unoriented_holds = false;
};

/// For `trials` random orientations, checks D̃D̃ᵀ = D − A in integer
/// arithmetic. Requires binary weights.
Adjp2Report check_adjp2(const WeightedGraph& g, int trials = 100, std::uint64_t seed = 0);

}  // namespace specgraph
