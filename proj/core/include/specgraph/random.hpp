#pragma once

#include <cstddef>
#include <random>

#include "specgraph/graph.hpp"
#include "specgraph/linalg.hpp"

namespace specgraph {

/// Seeded generator used throughout; seeds are recorded in reports.
using Rng = std::mt19937_64;

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);

/// rows×cols matrix with orthonormal columns (cols ≤ rows): QR of a
/// Gaussian matrix with the signs of R's diagonal folded into Q.
Matrix random_orthonormal(std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_orthogonal(std::size_t n, Rng& rng);

Matrix random_symmetric(std::size_t n, Rng& rng);
Vector random_unit_vector(std::size_t n, Rng& rng);

/// Erdős–Rényi style graph: each pair is an edge with probability
/// `density`, weight uniform in [0.1, 1] (or 1 when `binary`).
WeightedGraph random_graph(std::size_t n, double density, Rng& rng, bool binary = false);

/// As random_graph, plus a random Hamiltonian path so the result is connected.
WeightedGraph random_connected_graph(std::size_t n, double density, Rng& rng, bool binary = false);

}  // namespace specgraph
