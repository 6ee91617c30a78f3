#include "specgraph/laplacian.hpp"

#include <algorithm>
#include <cmath>

#include "specgraph/error.hpp"

namespace specgraph {

namespace {

void require_positive_degrees(const Vector& d) {
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        if (!(d(i) > 0.0)) throw IsolatedVertexError(static_cast<std::size_t>(i));
    }
}

}  // namespace

SymMatrix laplacian(const WeightedGraph& g) {
    Matrix l = -g.weights();
    l.diagonal() = degrees(g);
    return SymMatrix(l);
}

LaplacianBundle normalized_laplacians(const WeightedGraph& g) {
    const Vector d = degrees(g);
    require_positive_degrees(d);
    SymMatrix l = laplacian(g);
    const Vector inv_sqrt = d.cwiseSqrt().cwiseInverse();
    Matrix l_sym = inv_sqrt.asDiagonal() * l.matrix() * inv_sqrt.asDiagonal();
    l_sym = 0.5 * (l_sym + l_sym.transpose());
    Matrix l_rw = d.cwiseInverse().asDiagonal() * l.matrix();
    return {std::move(l), d, SymMatrix(l_sym), std::move(l_rw)};
}

double quadratic_form(const SymMatrix& l, const Vector& x) {
    if (x.size() != static_cast<Eigen::Index>(l.size())) throw InvalidArgument("dimension mismatch");
    return x.dot(l.matrix() * x);
}

double pairwise_form(const Matrix& w, const Vector& x) {
    if (w.rows() != w.cols() || x.size() != w.rows()) throw InvalidArgument("dimension mismatch");
    double sum = 0.0;
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            const double diff = x(i) - x(j);
            sum += w(i, j) * diff * diff;
        }
    }
    return 0.5 * sum;
}

double pairwise_form(const WeightedGraph& g, const Vector& x) { return pairwise_form(g.weights(), x); }

std::size_t component_count_spectral(const WeightedGraph& g, double tol) {
    const Vector values = eigh(laplacian(g)).values;
    if (tol < 0.0) tol = 1e-8 * std::max(1.0, values(values.size() - 1));
    return static_cast<std::size_t>((values.array() < tol).count());
}

GeneralizedEigen generalized_eigen(const WeightedGraph& g) {
    const auto bundle = normalized_laplacians(g);
    auto dec = eigh(bundle.l_sym);
    const Vector inv_sqrt = bundle.degrees.cwiseSqrt().cwiseInverse();
    return {std::move(dec.values), inv_sqrt.asDiagonal() * dec.vectors};
}

Adjp2Report check_adjp2(const WeightedGraph& g, int trials, std::uint64_t seed) {
    if (!g.is_binary()) throw InvalidArgument("check_adjp2 needs a graph with 0/1 weights");
    const IntMatrix a = adjacency_matrix(g);
    IntMatrix d = IntMatrix::Zero(a.rows(), a.cols());
    d.diagonal() = a.rowwise().sum();
    const IntMatrix l = d - a;

    Adjp2Report report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const IntMatrix inc = incidence_matrix(orient(g, seed + static_cast<std::uint64_t>(t)));
        const IntMatrix product = inc * inc.transpose();
        report.max_deviation = std::max(report.max_deviation, (product - l).cwiseAbs().maxCoeff());
    }
    report.holds = report.max_deviation == 0;
    const IntMatrix un = unoriented_incidence_matrix(g);
    report.unoriented_holds = (un * un.transpose()) == d + a;
    return report;
}

}  // namespace specgraph
