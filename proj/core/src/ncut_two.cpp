#include "specgraph/ncut_two.hpp"

#include <algorithm>
#include <cmath>

#include "specgraph/error.hpp"
#include "specgraph/laplacian.hpp"

namespace specgraph {

namespace {

Partition bipartition(const std::vector<bool>& in_a) {
    NodeSet a;
    NodeSet rest;
    for (std::size_t i = 0; i < in_a.size(); ++i) (in_a[i] ? a : rest).push_back(i);
    return Partition(in_a.size(), {std::move(a), std::move(rest)});
}

struct Fit {
    Vector x;
    double a = 0.0;
    double beta = 0.0;
    double distance = 0.0;
};

// Least-squares a for X = a on the positive side and −βa elsewhere.
Fit fit(const Vector& z, const std::vector<bool>& in_a, double alpha, double total) {
    const double beta = alpha / (total - alpha);
    double sum_pos = 0.0;
    double sum_rest = 0.0;
    double n_a = 0.0;
    for (std::size_t i = 0; i < in_a.size(); ++i) {
        if (in_a[i]) {
            sum_pos += z(static_cast<Eigen::Index>(i));
            n_a += 1.0;
        } else {
            sum_rest += z(static_cast<Eigen::Index>(i));
        }
    }
    const double n = static_cast<double>(z.size());
    Fit f;
    f.beta = beta;
    f.a = (sum_pos - beta * sum_rest) / (n_a + beta * beta * (n - n_a));
    f.x.resize(z.size());
    for (std::size_t i = 0; i < in_a.size(); ++i) {
        f.x(static_cast<Eigen::Index>(i)) = in_a[i] ? f.a : -beta * f.a;
    }
    f.distance = (f.x - z).norm();
    return f;
}

}  // namespace

TwoWayIndicator TwoWayIndicator::from_values(const std::vector<bool>& membership, double a, double b) {
    if (a == 0.0 || b == 0.0) throw InvalidArgument("indicator values must be nonzero");
    if (a == b) throw InvalidArgument("indicator values must differ");
    const auto count_a = std::count(membership.begin(), membership.end(), true);
    if (count_a == 0 || static_cast<std::size_t>(count_a) == membership.size()) {
        throw InvalidArgument("indicator must take both values");
    }
    TwoWayIndicator ind;
    ind.a = a;
    ind.b = b;
    ind.membership.assign(membership.begin(), membership.end());
    ind.x.resize(static_cast<Eigen::Index>(membership.size()));
    for (std::size_t i = 0; i < membership.size(); ++i) ind.x(static_cast<Eigen::Index>(i)) = membership[i] ? a : b;
    return ind;
}

TwoWayIndicator TwoWayIndicator::scaled(double factor) const {
    if (factor == 0.0) throw InvalidArgument("scale factor must be nonzero");
    TwoWayIndicator out = *this;
    out.a *= factor;
    out.b *= factor;
    out.x *= factor;
    return out;
}

NodeSet TwoWayIndicator::side_a() const {
    NodeSet out;
    for (std::size_t i = 0; i < membership.size(); ++i) {
        if (membership[i]) out.push_back(i);
    }
    return out;
}

TwoWayIndicator make_indicator(const WeightedGraph& g, std::span<const std::size_t> a,
                               IndicatorConvention convention) {
    const std::size_t n = g.size();
    std::vector<bool> in_a(n, false);
    for (const auto i : a) {
        if (i >= n) throw InvalidArgument("node " + std::to_string(i) + " out of range");
        in_a[i] = true;
    }
    const auto count_a = static_cast<std::size_t>(std::count(in_a.begin(), in_a.end(), true));
    if (count_a == 0 || count_a == n) throw InvalidArgument("A must be a proper nonempty subset of V");

    const NodeSet rest = complement(g, a);
    const double alpha = vol(g, a);
    const double d = alpha + vol(g, rest);
    if (alpha == 0.0) throw IsolatedVertexError(*std::min_element(a.begin(), a.end()));
    if (d - alpha == 0.0) throw IsolatedVertexError(rest.front());

    double va = 0.0;
    double vb = 0.0;
    switch (convention) {
        case IndicatorConvention::VonLuxburg:
            va = std::sqrt((d - alpha) / alpha);
            vb = -std::sqrt(alpha / (d - alpha));
            break;
        case IndicatorConvention::ShiMalik: {
            const double k = alpha / d;
            va = 1.0;
            vb = -k / (1.0 - k);
            break;
        }
        case IndicatorConvention::BelkinNiyogi:
            va = 1.0 / alpha;
            vb = -1.0 / (d - alpha);
            break;
    }
    return TwoWayIndicator::from_values(in_a, va, vb);
}

bool check_dagger(const WeightedGraph& g, const TwoWayIndicator& ind) {
    if (ind.membership.size() != g.size()) throw InvalidArgument("indicator size does not match the graph");
    const NodeSet a = ind.side_a();
    const double alpha = vol(g, a);
    const double d = degrees(g).sum();
    const double residual = ind.a * alpha + ind.b * (d - alpha);
    return std::abs(residual) <= 1e-10 * d * std::max(std::abs(ind.a), std::abs(ind.b));
}

double ncut_rayleigh(const WeightedGraph& g, const TwoWayIndicator& ind) {
    if (!check_dagger(g, ind)) {
        throw PreconditionError("indicator is not D-orthogonal to 1; the ratio is not a normalized cut");
    }
    const double num = quadratic_form(laplacian(g), ind.x);
    const double den = ind.x.dot(degrees(g).cwiseProduct(ind.x));
    return num / den;
}

RelaxedSolution relax_two(const WeightedGraph& g) {
    if (g.size() < 2) throw PreconditionError("need at least two nodes");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    const auto bundle = normalized_laplacians(g);
    const auto dec = eigh(bundle.l_sym);
    RelaxedSolution out;
    out.y = dec.vectors.col(1);
    out.z = bundle.degrees.cwiseSqrt().cwiseInverse().cwiseProduct(out.y);
    out.nu2 = dec.values(1);
    return out;
}

Partition sign_round(const Vector& z) {
    std::vector<bool> in_a(static_cast<std::size_t>(z.size()));
    for (Eigen::Index i = 0; i < z.size(); ++i) in_a[static_cast<std::size_t>(i)] = z(i) >= 0.0;
    const auto count_a = std::count(in_a.begin(), in_a.end(), true);
    if (count_a == 0 || count_a == z.size()) throw InvalidArgument("Z must have entries of both signs");
    return bipartition(in_a);
}

RoundingResult round_two(const WeightedGraph& g, const Vector& z_in) {
    const auto n = static_cast<Eigen::Index>(g.size());
    if (z_in.size() != n) throw InvalidArgument("Z has the wrong length");
    const Vector d = degrees(g);
    const double total = d.sum();

    // Compare each sign class with its own mean.
    double sum_pos = 0.0, sum_neg = 0.0;
    Eigen::Index n_pos = 0, n_neg = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (z_in(i) > 0.0) {
            sum_pos += z_in(i);
            ++n_pos;
        } else if (z_in(i) < 0.0) {
            sum_neg += z_in(i);
            ++n_neg;
        }
    }
    if (n_pos == 0 || n_neg == 0) throw InvalidArgument("Z must have entries of both signs");
    const double mean_pos = sum_pos / static_cast<double>(n_pos);
    const double mean_neg = sum_neg / static_cast<double>(n_neg);
    double spread_pos = 0.0, spread_neg = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (z_in(i) > 0.0) spread_pos += (z_in(i) - mean_pos) * (z_in(i) - mean_pos);
        if (z_in(i) < 0.0) spread_neg += (z_in(i) - mean_neg) * (z_in(i) - mean_neg);
    }
    const bool flipped = spread_pos > spread_neg;
    const Vector z = flipped ? Vector(-z_in) : z_in;

    std::vector<bool> in_a(static_cast<std::size_t>(n), false);
    std::vector<std::size_t> zeros;
    double alpha = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (z(i) > 0.0) {
            in_a[static_cast<std::size_t>(i)] = true;
            alpha += d(i);
        } else if (z(i) == 0.0) {
            zeros.push_back(static_cast<std::size_t>(i));
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (d(i) == 0.0) throw IsolatedVertexError(static_cast<std::size_t>(i));
    }

    Fit best = fit(z, in_a, alpha, total);
    std::vector<double> history{best.distance};
    for (const auto i : zeros) {
        in_a[i] = true;
        const double alpha_try = alpha + d(static_cast<Eigen::Index>(i));
        Fit trial = fit(z, in_a, alpha_try, total);
        if (trial.distance < best.distance) {
            best = std::move(trial);
            alpha = alpha_try;
            history.push_back(best.distance);
        } else {
            in_a[i] = false;
        }
    }
    if (best.a == 0.0) throw PreconditionError("least-squares fit degenerated to X = 0");

    RoundingResult out{TwoWayIndicator::from_values(in_a, best.a, -best.beta * best.a), bipartition(in_a),
                       best.distance, flipped, std::move(history)};
    return out;
}

}  // namespace specgraph
