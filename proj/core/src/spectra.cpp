#include "specgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "specgraph/error.hpp"
#include "specgraph/random.hpp"

namespace specgraph {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

// Largest-magnitude entry made positive; near-ties resolved to the lowest index.
// Returns true when the column was negated.
bool fix_sign(Eigen::Ref<Vector> v) {
    if (v.size() == 0) return false;
    const double biggest = v.cwiseAbs().maxCoeff();
    if (biggest == 0.0) return false;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= biggest * (1.0 - 1e-12)) {
            if (v(i) < 0.0) {
                v = -v;
                return true;
            }
            return false;
        }
    }
    return false;
}

std::vector<Eigen::Index> argsort(const Vector& values, bool descending) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return descending ? values(a) > values(b) : values(a) < values(b);
    });
    return order;
}

// tan of the Jacobi angle for zeta = (a_qq − a_pp) / (2 a_pq), smaller root.
double jacobi_tangent(double zeta) {
    return (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
}

// Orthonormal completion: replaces the columns flagged in `missing` by unit
// vectors orthogonal to every other column.
void complete_orthonormal(Matrix& q, const std::vector<bool>& missing) {
    const Eigen::Index m = q.rows();
    Eigen::Index next_basis = 0;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        if (!missing[static_cast<std::size_t>(j)]) continue;
        for (; next_basis < m; ++next_basis) {
            Vector cand = Vector::Unit(m, next_basis);
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index k = 0; k < q.cols(); ++k) {
                    if (k == j || (missing[static_cast<std::size_t>(k)] && k > j)) continue;
                    cand -= q.col(k).dot(cand) * q.col(k);
                }
            }
            if (cand.norm() > 1e-8) {
                q.col(j) = cand / cand.norm();
                ++next_basis;
                break;
            }
        }
    }
}

SvdResult svd_tall(const Matrix& a, const JacobiOptions& options) {
    const Eigen::Index n = a.cols();
    Matrix u = a;
    Matrix v = Matrix::Identity(n, n);

    bool converged = n < 2;
    double worst = 0.0;
    for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double alpha = u.col(p).squaredNorm();
                const double beta = u.col(q).squaredNorm();
                const double gamma = u.col(p).dot(u.col(q));
                if (gamma == 0.0) continue;
                const double scale = std::sqrt(alpha * beta);
                const double cosine = std::abs(gamma) / scale;
                if (!(cosine > options.tolerance)) continue;
                worst = std::max(worst, cosine);
                converged = false;
                const double t = jacobi_tangent((beta - alpha) / (2.0 * gamma));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const Vector up = u.col(p);
                u.col(p) = c * up - s * u.col(q);
                u.col(q) = s * up + c * u.col(q);
                const Vector vp = v.col(p);
                v.col(p) = c * vp - s * v.col(q);
                v.col(q) = s * vp + c * v.col(q);
            }
        }
    }
    if (!converged) throw ConvergenceError("one-sided Jacobi SVD did not converge", worst);

    Vector sigma = u.colwise().norm().transpose();
    const auto order = argsort(sigma, /*descending=*/true);
    SvdResult out;
    out.singular_values.resize(n);
    out.u.resize(a.rows(), n);
    out.v.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.singular_values(k) = sigma(order[static_cast<std::size_t>(k)]);
        out.u.col(k) = u.col(order[static_cast<std::size_t>(k)]);
        out.v.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }

    const double top = n > 0 ? out.singular_values(0) : 0.0;
    std::vector<bool> missing(static_cast<std::size_t>(n), false);
    bool any_missing = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double sk = out.singular_values(k);
        if (top == 0.0 || sk <= top * 1e-13) {
            missing[static_cast<std::size_t>(k)] = true;
            any_missing = true;
        } else {
            out.u.col(k) /= sk;
        }
    }
    if (any_missing) complete_orthonormal(out.u, missing);

    for (Eigen::Index k = 0; k < n; ++k) {
        if (fix_sign(out.u.col(k))) out.v.col(k) = -out.v.col(k);
    }
    return out;
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& s) {
    if (s.rows() != s.cols()) throw InvalidArgument("symmetric matrix must be square");
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < s.cols(); ++j) {
            if (!std::isfinite(s(i, j)) || !std::isfinite(s(j, i))) {
                throw InvalidArgument("matrix has non-finite entries");
            }
            if (std::abs(s(i, j) - s(j, i)) > 1e-12 * std::max(1.0, std::abs(s(i, j)))) {
                throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
        if (!std::isfinite(s(i, i))) throw InvalidArgument("matrix has non-finite entries");
    }
    m_ = 0.5 * (s + s.transpose());
}

EigenDecomposition eigh(const SymMatrix& s, const JacobiOptions& options) {
    Matrix a = s.matrix();
    const Eigen::Index n = a.rows();
    Matrix v = Matrix::Identity(n, n);
    const double threshold = options.tolerance * a.norm();

    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= options.max_sweeps) {
            throw ConvergenceError("Jacobi eigensolver exceeded " + std::to_string(options.max_sweeps) +
                                       " sweeps",
                                   off);
        }
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double t = jacobi_tangent((a(q, q) - a(p, p)) / (2.0 * apq));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - sn * akq;
                    a(k, q) = a(q, k) = sn * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(a);
    }

    const Vector diag = a.diagonal();
    const auto order = argsort(diag, /*descending=*/false);
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = diag(order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
        fix_sign(out.vectors.col(k));
    }
    return out;
}

SvdResult svd(const Matrix& a, const JacobiOptions& options) {
    if (!a.allFinite()) throw InvalidArgument("svd input has non-finite entries");
    if (a.rows() >= a.cols()) return svd_tall(a, options);
    SvdResult t = svd_tall(a.transpose(), options);
    // Keep the sign convention on U for the original orientation.
    for (Eigen::Index k = 0; k < t.v.cols(); ++k) {
        if (fix_sign(t.v.col(k))) t.u.col(k) = -t.u.col(k);
    }
    return {std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

double rayleigh(const SymMatrix& s, const Vector& x) {
    if (x.size() != static_cast<Eigen::Index>(s.size())) throw InvalidArgument("dimension mismatch");
    const double xx = x.squaredNorm();
    if (xx == 0.0) throw InvalidArgument("Rayleigh ratio of the zero vector");
    return x.dot(s.matrix() * x) / xx;
}

RatioRange subspace_ratio_range(const SymMatrix& s, const Matrix& basis) {
    if (basis.rows() != static_cast<Eigen::Index>(s.size()) || basis.cols() == 0) {
        throw InvalidArgument("subspace basis has the wrong shape");
    }
    const Matrix b = basis.transpose() * s.matrix() * basis;
    const auto dec = eigh(SymMatrix(0.5 * (b + b.transpose())));
    return {dec.values(0), dec.values(dec.values.size() - 1)};
}

RayleighRitzReport check_rayleigh_ritz(const SymMatrix& s, int samples, std::uint64_t seed) {
    RayleighRitzReport report;
    report.decomposition = eigh(s);
    const auto& values = report.decomposition.values;
    const auto& vectors = report.decomposition.vectors;
    const Eigen::Index n = values.size();
    Rng rng(seed);
    report.max_violation = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lambda = values(k);
        report.attainment_error =
            std::max(report.attainment_error, std::abs(rayleigh(s, vectors.col(k)) - lambda));
        const Matrix upper = vectors.rightCols(n - k);  // span(u_k..u_n): ratios >= λ_k
        const Matrix lower = vectors.leftCols(k + 1);   // span(u_1..u_k): ratios <= λ_k
        for (int t = 0; t < samples; ++t) {
            const Vector x_hi = upper * random_unit_vector(static_cast<std::size_t>(upper.cols()), rng);
            const Vector x_lo = lower * random_unit_vector(static_cast<std::size_t>(lower.cols()), rng);
            report.max_violation = std::max(report.max_violation, lambda - rayleigh(s, x_hi));
            report.max_violation = std::max(report.max_violation, rayleigh(s, x_lo) - lambda);
            report.samples_checked += 2;
        }
    }
    if (report.samples_checked == 0) report.max_violation = 0.0;
    return report;
}

InterlacingReport check_interlacing(const SymMatrix& a, const Matrix& r, double slack) {
    const auto n = static_cast<Eigen::Index>(a.size());
    if (r.rows() != n || r.cols() == 0 || r.cols() > n) {
        throw InvalidArgument("R must be n×m with 1 <= m <= n");
    }
    const double orth = orthonormality_error(r);
    if (orth > 1e-8) {
        throw PreconditionError("RᵀR differs from I by " + std::to_string(orth));
    }
    const Eigen::Index m = r.cols();
    const Matrix b = r.transpose() * a.matrix() * r;
    const Vector lambda = eigh(a).values.reverse();  // descending
    const Vector mu = eigh(SymMatrix(0.5 * (b + b.transpose()))).values.reverse();

    InterlacingReport report;
    report.holds = true;
    for (Eigen::Index i = 0; i < m; ++i) {
        const double lower = mu(i) - lambda(n - m + i);
        const double upper = lambda(i) - mu(i);
        report.lower_margins.push_back(lower);
        report.upper_margins.push_back(upper);
        if (lower < -slack || upper < -slack) report.holds = false;
    }
    return report;
}

CourantFischerReport check_courant_fischer(const SymMatrix& s, std::size_t k, int trials,
                                           std::uint64_t seed, double slack) {
    const std::size_t n = s.size();
    if (k < 1 || k > n) throw InvalidArgument("Courant-Fischer index k must be in [1, n]");
    const auto dec = eigh(s);
    const auto kk = static_cast<Eigen::Index>(k);
    const auto nn = static_cast<Eigen::Index>(n);

    CourantFischerReport report;
    report.eigenvalue = dec.values(kk - 1);
    report.min_max_optimal = subspace_ratio_range(s, dec.vectors.leftCols(kk)).max;
    report.max_min_optimal = subspace_ratio_range(s, dec.vectors.rightCols(nn - kk + 1)).min;
    report.exact_error = std::max(std::abs(report.min_max_optimal - report.eigenvalue),
                                  std::abs(report.max_min_optimal - report.eigenvalue));

    Rng rng(seed);
    report.smallest_sampled_max = std::numeric_limits<double>::infinity();
    report.largest_sampled_min = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        report.smallest_sampled_max =
            std::min(report.smallest_sampled_max, subspace_ratio_range(s, random_orthonormal(n, k, rng)).max);
        report.largest_sampled_min = std::max(
            report.largest_sampled_min, subspace_ratio_range(s, random_orthonormal(n, n - k + 1, rng)).min);
    }
    report.holds = report.exact_error <= slack && report.smallest_sampled_max >= report.eigenvalue - slack &&
                   report.largest_sampled_min <= report.eigenvalue + slack;
    return report;
}

}  // namespace specgraph
