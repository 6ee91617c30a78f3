#include "specgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "specgraph/error.hpp"

namespace specgraph {

namespace {

void check_node(std::size_t n, std::size_t i) {
    if (i >= n) {
        throw InvalidArgument("node " + std::to_string(i) + " out of range for graph of size " +
                              std::to_string(n));
    }
}

void check_nodes(std::size_t n, std::span<const std::size_t> a) {
    for (std::size_t i : a) check_node(n, i);
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(Matrix weights) : w_(std::move(weights)) {
    if (w_.rows() != w_.cols()) throw InvalidArgument("weight matrix must be square");
    if (w_.rows() < 1) throw InvalidArgument("graph must have at least one node");
    const Eigen::Index n = w_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (w_(i, i) != 0.0) {
            throw InvalidArgument("self-loop at node " + std::to_string(i));
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const double w = w_(i, j);
            if (!std::isfinite(w) || w < 0.0) {
                throw InvalidArgument("weight (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") must be finite and nonnegative");
            }
            if (w != w_(j, i)) {
                throw InvalidArgument("weight matrix is not symmetric at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
            }
        }
    }
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::span<const WeightedEdge> edges) {
    if (n < 1) throw InvalidArgument("graph must have at least one node");
    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& e : edges) {
        check_node(n, e.u);
        check_node(n, e.v);
        if (e.u == e.v) throw InvalidArgument("self-loop at node " + std::to_string(e.u));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw InvalidArgument("edge weight must be positive and finite");
        }
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        if (w(u, v) != 0.0) {
            throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "}");
        }
        w(u, v) = e.weight;
        w(v, u) = e.weight;
    }
    return WeightedGraph(std::move(w));
}

Eigen::Index WeightedGraph::index(std::size_t i) const {
    check_node(size(), i);
    return static_cast<Eigen::Index>(i);
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
    std::vector<WeightedEdge> out;
    const Eigen::Index n = w_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (w_(i, j) > 0.0) {
                out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), w_(i, j)});
            }
        }
    }
    return out;
}

std::size_t WeightedGraph::edge_count() const {
    return static_cast<std::size_t>((w_.array() > 0.0).count()) / 2;
}

bool WeightedGraph::is_binary() const {
    return ((w_.array() == 0.0) || (w_.array() == 1.0)).all();
}

// ---------------------------------------------------------------------------
// DirectedGraph

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& a : arcs_) {
        check_node(n_, a.source);
        check_node(n_, a.target);
        if (a.source == a.target) {
            throw InvalidArgument("arc source equals target (" + std::to_string(a.source) + ")");
        }
        if (!seen.emplace(a.source, a.target).second) {
            throw InvalidArgument("duplicate arc (" + std::to_string(a.source) + ", " +
                                  std::to_string(a.target) + ")");
        }
    }
}

std::size_t DirectedGraph::degree(std::size_t v) const {
    check_node(n_, v);
    std::set<std::size_t> neighbours;
    for (const auto& a : arcs_) {
        if (a.source == v) neighbours.insert(a.target);
        if (a.target == v) neighbours.insert(a.source);
    }
    return neighbours.size();
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::size_t n, std::vector<NodeSet> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidArgument("partition needs at least one block");
    std::vector<bool> covered(n_, false);
    for (auto& b : blocks_) {
        if (b.empty()) throw InvalidArgument("partition blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (std::size_t i : b) {
            check_node(n_, i);
            if (covered[i]) {
                throw InvalidArgument("node " + std::to_string(i) + " appears in two blocks");
            }
            covered[i] = true;
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (!covered[i]) throw InvalidArgument("node " + std::to_string(i) + " is in no block");
    }
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
    std::size_t k = 0;
    for (std::size_t l : labels) k = std::max(k, l + 1);
    std::vector<NodeSet> blocks(k);
    for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(i);
    return Partition(labels.size(), std::move(blocks));
}

std::vector<std::size_t> Partition::labels() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        for (std::size_t i : blocks_[j]) out[i] = j;
    }
    return out;
}

Partition Partition::canonical() const {
    auto blocks = blocks_;
    std::sort(blocks.begin(), blocks.end(),
              [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
    return Partition(n_, std::move(blocks));
}

bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.canonical().blocks_ == b.canonical().blocks_;
}

// ---------------------------------------------------------------------------
// Degree, incidence, adjacency

double degree(const WeightedGraph& g, std::size_t i) {
    check_node(g.size(), i);
    return g.weights().row(static_cast<Eigen::Index>(i)).sum();
}

Vector degrees(const WeightedGraph& g) { return g.weights().rowwise().sum(); }

Matrix degree_matrix(const WeightedGraph& g) { return degrees(g).asDiagonal(); }

IntMatrix degree_matrix(const DirectedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    IntMatrix d = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = static_cast<int>(g.degree(static_cast<std::size_t>(i)));
    return d;
}

IntMatrix incidence_matrix(const DirectedGraph& g) {
    const auto& arcs = g.arcs();
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(arcs.size()));
    for (std::size_t e = 0; e < arcs.size(); ++e) {
        const auto col = static_cast<Eigen::Index>(e);
        m(static_cast<Eigen::Index>(arcs[e].source), col) = 1;
        m(static_cast<Eigen::Index>(arcs[e].target), col) = -1;
    }
    return m;
}

IntMatrix unoriented_incidence_matrix(const WeightedGraph& g) {
    if (!g.is_binary()) throw InvalidArgument("unoriented incidence matrix needs 0/1 weights");
    const auto edges = g.edges();
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto col = static_cast<Eigen::Index>(e);
        m(static_cast<Eigen::Index>(edges[e].u), col) = 1;
        m(static_cast<Eigen::Index>(edges[e].v), col) = 1;
    }
    return m;
}

IntMatrix adjacency_matrix(const DirectedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    IntMatrix a = IntMatrix::Zero(n, n);
    for (const auto& arc : g.arcs()) {
        a(static_cast<Eigen::Index>(arc.source), static_cast<Eigen::Index>(arc.target)) = 1;
        a(static_cast<Eigen::Index>(arc.target), static_cast<Eigen::Index>(arc.source)) = 1;
    }
    return a;
}

IntMatrix adjacency_matrix(const WeightedGraph& g) {
    return (g.weights().array() > 0.0).cast<int>().matrix();
}

DirectedGraph orient(const WeightedGraph& g, std::uint64_t seed) {
    if (!g.is_binary()) throw InvalidArgument("orient needs 0/1 weights");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) {
        if (rng() & 1U) {
            arcs.push_back({e.v, e.u});
        } else {
            arcs.push_back({e.u, e.v});
        }
    }
    return DirectedGraph(g.size(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Volumes and cuts

NodeSet complement(const WeightedGraph& g, std::span<const std::size_t> a) {
    check_nodes(g.size(), a);
    std::vector<bool> in(g.size(), false);
    for (std::size_t i : a) in[i] = true;
    NodeSet out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

double vol(const WeightedGraph& g, std::span<const std::size_t> a) {
    check_nodes(g.size(), a);
    double total = 0.0;
    for (std::size_t i : a) total += degree(g, i);
    return total;
}

double links(const WeightedGraph& g, std::span<const std::size_t> a, std::span<const std::size_t> b) {
    check_nodes(g.size(), a);
    check_nodes(g.size(), b);
    const Matrix& w = g.weights();
    double total = 0.0;
    for (std::size_t i : a) {
        for (std::size_t j : b) total += w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return total;
}

double cut(const WeightedGraph& g, std::span<const std::size_t> a) {
    const NodeSet rest = complement(g, a);
    return links(g, a, rest);
}

double assoc(const WeightedGraph& g, std::span<const std::size_t> a) { return links(g, a, a); }

double ncut(const WeightedGraph& g, const Partition& p) {
    if (p.size() != g.size()) throw InvalidArgument("partition size does not match graph");
    double total = 0.0;
    for (const auto& block : p.blocks()) {
        const double v = vol(g, block);
        if (v <= 0.0) throw IsolatedVertexError(block.front());
        total += cut(g, block) / v;
    }
    return total;
}

std::vector<NodeSet> connected_components(const WeightedGraph& g) {
    const std::size_t n = g.size();
    const Matrix& w = g.weights();
    std::vector<bool> seen(n, false);
    std::vector<NodeSet> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        NodeSet comp;
        std::queue<std::size_t> todo;
        todo.push(start);
        seen[start] = true;
        while (!todo.empty()) {
            const std::size_t u = todo.front();
            todo.pop();
            comp.push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (!seen[v] && w(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) > 0.0) {
                    seen[v] = true;
                    todo.push(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).size() == 1; }

// ---------------------------------------------------------------------------
// Generators

WeightedGraph ring(std::size_t n) {
    if (n < 3) throw InvalidArgument("ring needs n >= 3");
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return WeightedGraph::from_edges(n, edges);
}

WeightedGraph path(std::size_t n) {
    if (n < 2) throw InvalidArgument("path needs n >= 2");
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return WeightedGraph::from_edges(n, edges);
}

WeightedGraph complete(std::size_t n) {
    if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
    Matrix w = Matrix::Ones(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    w.diagonal().setZero();
    return WeightedGraph(std::move(w));
}

}  // namespace specgraph
