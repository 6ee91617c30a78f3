#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specgraph/linalg.hpp"

namespace specgraph {

/// Sorted list of distinct node ids.
using NodeSet = std::vector<std::size_t>;

struct WeightedEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected weighted graph G = (V, W) stored as a dense symmetric matrix.
///
/// Invariants (checked on construction): W is square, symmetric, has a zero
/// diagonal and nonnegative finite entries. Node ids are 0-based. An edge
/// {i, j} exists iff W(i, j) > 0.
class WeightedGraph {
public:
    explicit WeightedGraph(Matrix weights);

    /// Builds a graph on `n` nodes; each pair may appear at most once.
    static WeightedGraph from_edges(std::size_t n, std::span<const WeightedEdge> edges);

    std::size_t size() const noexcept { return static_cast<std::size_t>(w_.rows()); }
    const Matrix& weights() const noexcept { return w_; }
    double weight(std::size_t i, std::size_t j) const { return w_(index(i), index(j)); }

    /// Edges with u < v, ordered lexicographically by (u, v).
    std::vector<WeightedEdge> edges() const;
    std::size_t edge_count() const;

    /// True when every weight is 0 or 1.
    bool is_binary() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) { return a.w_ == b.w_; }

private:
    Eigen::Index index(std::size_t i) const;

    Matrix w_;
};

struct Arc {
    std::size_t source = 0;
    std::size_t target = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple directed graph: ordered pairs of distinct nodes, no duplicates.
/// Arc order is preserved and determines incidence-matrix columns.
class DirectedGraph {
public:
    DirectedGraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Number of nodes u with (v, u) or (u, v) an arc.
    std::size_t degree(std::size_t v) const;

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
};

/// A partition of {0, …, n−1} into nonempty disjoint blocks.
///
/// Block order is kept as given (it matters for partition matrices); use
/// `canonical()` or `==` to compare partitions as sets of blocks.
class Partition {
public:
    Partition(std::size_t n, std::vector<NodeSet> blocks);

    /// Block labels in [0, K); every label must be used.
    static Partition from_labels(std::span<const std::size_t> labels);

    std::size_t size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<NodeSet>& blocks() const noexcept { return blocks_; }
    const NodeSet& block(std::size_t j) const { return blocks_.at(j); }

    /// labels()[i] is the index of the block containing node i.
    std::vector<std::size_t> labels() const;

    /// Blocks ordered by their smallest node.
    Partition canonical() const;

    friend bool operator==(const Partition& a, const Partition& b);

private:
    std::size_t n_;
    std::vector<NodeSet> blocks_;
};

double degree(const WeightedGraph& g, std::size_t i);
Vector degrees(const WeightedGraph& g);
Matrix degree_matrix(const WeightedGraph& g);
IntMatrix degree_matrix(const DirectedGraph& g);

/// n×|E| matrix with +1 at the source and −1 at the target of each arc.
IntMatrix incidence_matrix(const DirectedGraph& g);

/// n×|E| 0/1 matrix, edges in lexicographic order. Requires binary weights.
IntMatrix unoriented_incidence_matrix(const WeightedGraph& g);

IntMatrix adjacency_matrix(const DirectedGraph& g);
/// a(i, j) = 1 iff W(i, j) > 0.
IntMatrix adjacency_matrix(const WeightedGraph& g);

/// Gives each edge of a binary graph one direction. Edges are visited in
/// lexicographic order; each takes one bit from a seeded mt19937_64.
DirectedGraph orient(const WeightedGraph& g, std::uint64_t seed);

NodeSet complement(const WeightedGraph& g, std::span<const std::size_t> a);
double vol(const WeightedGraph& g, std::span<const std::size_t> a);
double links(const WeightedGraph& g, std::span<const std::size_t> a, std::span<const std::size_t> b);
double cut(const WeightedGraph& g, std::span<const std::size_t> a);
double assoc(const WeightedGraph& g, std::span<const std::size_t> a);

/// Σ_j cut(A_j)/vol(A_j). Throws IsolatedVertexError for a zero-volume block.
double ncut(const WeightedGraph& g, const Partition& p);

/// Components of the underlying graph, each sorted, ordered by smallest node.
std::vector<NodeSet> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Unit-weight generators.
WeightedGraph ring(std::size_t n);
WeightedGraph path(std::size_t n);
WeightedGraph complete(std::size_t n);
/// 60-node skeleton of the truncated icosahedron (bundled edge list).
WeightedGraph bucky();

/// Text format: `u v [w]` per line, `#` comments, optional leading
/// `nodes N` header. Throws ParseError with the offending line number.
WeightedGraph parse_graph(std::string_view text);
/// Always writes a `nodes N` header, then edges in lexicographic order.
std::string serialize_graph(const WeightedGraph& g);

}  // namespace specgraph
