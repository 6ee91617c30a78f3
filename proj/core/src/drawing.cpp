#include "specgraph/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "specgraph/error.hpp"
#include "specgraph/laplacian.hpp"

namespace specgraph {

namespace {

void require_rows(const WeightedGraph& g, const Drawing& r) {
    if (r.vertex_count() != g.size()) {
        throw InvalidArgument("drawing has " + std::to_string(r.vertex_count()) + " rows but the graph has " +
                              std::to_string(g.size()) + " nodes");
    }
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

}  // namespace

Drawing::Drawing(Matrix coordinates) : r_(std::move(coordinates)) {
    if (r_.cols() < 1) throw InvalidArgument("drawing dimension must be at least 1");
    if (r_.cols() >= r_.rows()) {
        throw InvalidArgument("drawing dimension must be smaller than the vertex count");
    }
    if (!r_.allFinite()) throw InvalidArgument("drawing has non-finite coordinates");
}

bool Drawing::is_balanced() const {
    return r_.colwise().sum().cwiseAbs().maxCoeff() <= 1e-8 * static_cast<double>(r_.rows());
}

bool Drawing::is_orthogonal() const { return orthonormality_error(r_) <= 1e-8; }

std::vector<std::pair<std::size_t, std::size_t>> Drawing::coincident_vertices(double tol) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (Eigen::Index i = 0; i < r_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < r_.rows(); ++j) {
            if ((r_.row(i) - r_.row(j)).norm() <= tol) {
                out.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
    }
    return out;
}

double energy(const WeightedGraph& g, const Drawing& r) {
    require_rows(g, r);
    const Matrix& x = r.coordinates();
    double sum = 0.0;
    for (const auto& e : g.edges()) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        sum += e.weight * (x.row(u) - x.row(v)).squaredNorm();
    }
    return sum;
}

double energy_trace(const WeightedGraph& g, const Drawing& r) {
    require_rows(g, r);
    const Matrix& x = r.coordinates();
    return (x.transpose() * laplacian(g).matrix() * x).trace();
}

Vector edge_weight_diagonal(const WeightedGraph& g) {
    const auto edges = g.edges();
    Vector w(static_cast<Eigen::Index>(edges.size()));
    for (std::size_t k = 0; k < edges.size(); ++k) w(static_cast<Eigen::Index>(k)) = edges[k].weight;
    return w;
}

Matrix oriented_incidence(const WeightedGraph& g, std::uint64_t seed) {
    const auto edges = g.edges();
    std::mt19937_64 rng(seed);
    Matrix d = Matrix::Zero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(edges.size()));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const bool flip = (rng() & 1U) != 0U;
        const auto col = static_cast<Eigen::Index>(k);
        d(static_cast<Eigen::Index>(flip ? edges[k].v : edges[k].u), col) = 1.0;
        d(static_cast<Eigen::Index>(flip ? edges[k].u : edges[k].v), col) = -1.0;
    }
    return d;
}

double energy_incidence(const WeightedGraph& g, const Drawing& r, std::uint64_t seed) {
    require_rows(g, r);
    const Matrix d = oriented_incidence(g, seed);
    const Matrix y = d.transpose() * r.coordinates();  // one row per edge: ρ(s) − ρ(t)
    return (y.transpose() * edge_weight_diagonal(g).asDiagonal() * y).trace();
}

Drawing spectral_drawing(const WeightedGraph& g, std::size_t n) {
    if (n < 1 || n + 1 > g.size()) {
        throw PreconditionError("drawing dimension " + std::to_string(n) + " needs 1 <= n <= " +
                                std::to_string(g.size() == 0 ? 0 : g.size() - 1));
    }
    if (!is_connected(g)) {
        throw PreconditionError("graph is disconnected; draw each connected component separately");
    }
    const auto dec = eigh(laplacian(g));
    return Drawing(dec.vectors.middleCols(1, static_cast<Eigen::Index>(n)));
}

double minimum_energy_lower_bound(const WeightedGraph& g, std::size_t n) {
    if (n + 1 > g.size()) throw InvalidArgument("n + 1 exceeds the vertex count");
    const Vector values = eigh(laplacian(g)).values;
    return values.segment(1, static_cast<Eigen::Index>(n)).sum();
}

Drawing rotate_drawing(const Drawing& r, const Matrix& q) {
    const auto n = static_cast<Eigen::Index>(r.dimension());
    if (q.rows() != n || q.cols() != n) throw InvalidArgument("rotation has the wrong shape");
    if (orthonormality_error(q) > 1e-8) throw InvalidArgument("rotation matrix is not orthogonal");
    return Drawing(r.coordinates() * q);
}

std::string to_svg(const WeightedGraph& g, const Drawing& r) {
    require_rows(g, r);
    if (r.dimension() != 2) throw InvalidArgument("SVG output needs a 2-D drawing");
    const Matrix& x = r.coordinates();
    const double min_x = x.col(0).minCoeff();
    const double max_x = x.col(0).maxCoeff();
    const double min_y = x.col(1).minCoeff();
    const double max_y = x.col(1).maxCoeff();
    double diag = std::hypot(max_x - min_x, max_y - min_y);
    if (diag == 0.0) diag = 1.0;
    const double margin = 0.05 * diag;
    const double radius = 0.02 * diag;

    const auto edges = g.edges();
    double max_w = 0.0;
    for (const auto& e : edges) max_w = std::max(max_w, e.weight);
    const double base_stroke = 0.005 * diag;

    // SVG's y axis points down; flip so the picture matches the coordinates.
    const auto sx = [&](Eigen::Index i) { return fmt(x(i, 0)); };
    const auto sy = [&](Eigen::Index i) { return fmt(-x(i, 1)); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(min_x - margin) + ' ' +
           fmt(-max_y - margin) + ' ' + fmt(max_x - min_x + 2 * margin) + ' ' + fmt(max_y - min_y + 2 * margin) +
           "\">\n";
    out += "<g stroke=\"#333333\" stroke-linecap=\"round\">\n";
    for (const auto& e : edges) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        out += "<line x1=\"" + sx(u) + "\" y1=\"" + sy(u) + "\" x2=\"" + sx(v) + "\" y2=\"" + sy(v) +
               "\" stroke-width=\"" + fmt(base_stroke * e.weight / max_w) + "\"/>\n";
    }
    out += "</g>\n<g fill=\"#1f77b4\">\n";
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        out += "<circle cx=\"" + sx(i) + "\" cy=\"" + sy(i) + "\" r=\"" + fmt(radius) + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace specgraph
