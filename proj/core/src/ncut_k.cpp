#include "specgraph/ncut_k.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specgraph/error.hpp"
#include "specgraph/laplacian.hpp"
#include "specgraph/spectra.hpp"

namespace specgraph {

namespace {

double offdiag_max(const Matrix& m) {
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
        }
    }
    return worst;
}

// Smallest over largest eigenvalue of a Gram matrix; 0 for a singular one.
double gram_conditioning(const Matrix& gram) {
    const Vector values = eigh(SymMatrix(0.5 * (gram + gram.transpose()))).values;
    const double top = values(values.size() - 1);
    if (top <= 0.0) return 0.0;
    return std::max(0.0, values(0)) / top;
}

void require_full_column_rank(const Matrix& z, const char* what) {
    if (z.cols() == 0 || z.rows() < z.cols() || gram_conditioning(z.transpose() * z) <= 1e-12) {
        throw PreconditionError(std::string(what) + ": matrix does not have full column rank");
    }
}

// Householder reflection H with H·u/‖u‖ = 1_K/√K, so Z0·H has equal nonzero
// least-squares weights.
Matrix balancing_reflection(const Vector& u) {
    const auto k = u.size();
    const Vector w = Vector::Constant(k, 1.0 / std::sqrt(static_cast<double>(k)));
    const Vector p = u.normalized() - w;
    if (p.norm() <= 1e-14) return Matrix::Identity(k, k);
    return Matrix::Identity(k, k) - 2.0 * p * p.transpose() / p.squaredNorm();
}

PartitionMatrix build(const std::vector<std::size_t>& labels, const Vector& scales) {
    PartitionMatrix out;
    out.labels = labels;
    out.scales = scales;
    out.x = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), scales.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto j = static_cast<Eigen::Index>(labels[i]);
        out.x(static_cast<Eigen::Index>(i), j) = scales(j);
    }
    return out;
}

}  // namespace

Partition PartitionMatrix::partition() const {
    std::vector<NodeSet> blocks(clusters());
    for (std::size_t i = 0; i < labels.size(); ++i) blocks.at(labels[i]).push_back(i);
    return Partition(labels.size(), std::move(blocks));
}

PartitionMatrix partition_matrix(const WeightedGraph& g, const Partition& p, PartitionScaling scaling) {
    if (p.size() != g.size()) throw InvalidArgument("partition and graph sizes differ");
    Vector scales(static_cast<Eigen::Index>(p.block_count()));
    for (std::size_t j = 0; j < p.block_count(); ++j) {
        double a = 1.0;
        if (scaling == PartitionScaling::InverseSqrtVolume) {
            const double v = vol(g, p.block(j));
            if (v == 0.0) throw IsolatedVertexError(p.block(j).front());
            a = 1.0 / std::sqrt(v);
        }
        scales(static_cast<Eigen::Index>(j)) = a;
    }
    return build(p.labels(), scales);
}

PartitionMatrixReport validate_partition_matrix(const Matrix& x, const Vector& degrees, double tol) {
    if (degrees.size() != x.rows()) throw InvalidArgument("degree vector length differs from the row count");
    PartitionMatrixReport r;
    const Eigen::Index n = x.rows();
    const Eigen::Index k = x.cols();
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());

    r.columns_nonzero = k > 0;
    r.columns_two_valued = true;
    for (Eigen::Index j = 0; j < k; ++j) {
        double first = 0.0;
        bool found = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double v = x(i, j);
            if (v == 0.0) continue;
            if (!found) {
                first = v;
                found = true;
            } else if (std::abs(v - first) > tol * std::abs(first)) {
                r.columns_two_valued = false;
            }
        }
        if (!found) r.columns_nonzero = false;
    }

    r.rows_nonzero = true;
    r.rows_nonzero_det = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double sq = x.row(i).squaredNorm();
        r.rows_nonzero_det *= sq;
        if (sq == 0.0) r.rows_nonzero = false;
    }

    const Matrix gram = x.transpose() * x;
    r.columns_orthogonal_residual = offdiag_max(gram);
    r.columns_orthogonal = r.columns_orthogonal_residual <= tol * scale * scale;
    const Matrix dgram = x.transpose() * degrees.asDiagonal() * x;
    r.d_orthogonal_residual = offdiag_max(dgram);
    r.d_orthogonal = r.d_orthogonal_residual <= tol * scale * scale * std::max(1.0, degrees.cwiseAbs().maxCoeff());

    const Vector ones = Vector::Ones(n);
    if (k > 0 && gram_conditioning(gram) > 1e-12) {
        const Vector proj = x * gram.ldlt().solve(x.transpose() * ones);
        r.projector_residual = (proj - ones).cwiseAbs().maxCoeff();
        r.projector_fixes_ones = r.projector_residual <= tol;
    } else {
        r.projector_residual = std::numeric_limits<double>::infinity();
        r.projector_fixes_ones = false;
    }

    r.rows_sum_residual = k > 0 ? (x.rowwise().sum() - ones).cwiseAbs().maxCoeff()
                                : std::numeric_limits<double>::infinity();
    r.rows_sum_to_one = r.rows_sum_residual <= tol;
    return r;
}

double mu(const WeightedGraph& g, const Matrix& x) {
    if (x.rows() != static_cast<Eigen::Index>(g.size())) throw InvalidArgument("X has the wrong row count");
    const SymMatrix lap = laplacian(g);
    const Matrix& l = lap.matrix();
    const Vector d = degrees(g);
    double sum = 0.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const auto col = x.col(j);
        if (col.cwiseAbs().maxCoeff() == 0.0) {
            throw InvalidArgument("column " + std::to_string(j) + " of X is zero");
        }
        const double den = col.dot(d.cwiseProduct(col));
        if (den == 0.0) {
            Eigen::Index row = 0;
            col.cwiseAbs().maxCoeff(&row);
            throw IsolatedVertexError(static_cast<std::size_t>(row));
        }
        sum += col.dot(l * col) / den;
    }
    return sum;
}

double epsilon(const WeightedGraph& g, const Matrix& x) { return static_cast<double>(x.cols()) - mu(g, x); }

double mu_trace_form(const WeightedGraph& g, const Matrix& x) {
    if (x.rows() != static_cast<Eigen::Index>(g.size())) throw InvalidArgument("X has the wrong row count");
    const Vector d = degrees(g);
    const Vector lambda = (x.transpose() * d.asDiagonal() * x).diagonal();
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
        if (!(lambda(j) > 0.0)) throw PreconditionError("diag(XᵀDX) is singular");
    }
    const Vector inv_sqrt = lambda.cwiseSqrt().cwiseInverse();
    const Matrix m = inv_sqrt.asDiagonal() * x.transpose() * laplacian(g).matrix() * x * inv_sqrt.asDiagonal();
    return m.trace();
}

KWayRelaxed relax_k(const WeightedGraph& g, std::size_t k) {
    const std::size_t n = g.size();
    if (k < 2 || k >= n) {
        throw PreconditionError("cluster count K = " + std::to_string(k) + " must satisfy 2 <= K < N = " +
                                std::to_string(n));
    }
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    const auto bundle = normalized_laplacians(g);
    const auto dec = eigh(bundle.l_sym);
    const auto kk = static_cast<Eigen::Index>(k);

    KWayRelaxed out;
    out.y = dec.vectors.leftCols(kk);
    // The bottom eigenvector of a connected graph is D^{1/2}1 up to scale.
    const Vector sqrt_d = bundle.degrees.cwiseSqrt();
    out.y.col(0) = sqrt_d / sqrt_d.norm();
    out.z0 = sqrt_d.cwiseInverse().asDiagonal() * out.y;
    out.z = rescale_columns(out.z0 * balancing_reflection(rescale_weights(out.z0)));
    out.nu = dec.values.head(kk);
    out.trace_value = out.nu.sum();
    return out;
}

Matrix orthogonalize_columns(const Matrix& z) {
    require_full_column_rank(z, "orthogonalize_columns");
    const Matrix gram = z.transpose() * z;
    const auto dec = eigh(SymMatrix(0.5 * (gram + gram.transpose())));
    return z * dec.vectors;
}

Vector rescale_weights(const Matrix& z0) {
    require_full_column_rank(z0, "rescale_columns");
    const Matrix gram = z0.transpose() * z0;
    return gram.ldlt().solve(z0.transpose() * Vector::Ones(z0.rows()));
}

Matrix rescale_columns(const Matrix& z0) { return z0 * rescale_weights(z0).asDiagonal(); }

Matrix pod_r(const Matrix& z, const Matrix& x) {
    if (z.rows() != x.rows() || z.cols() != x.cols()) throw InvalidArgument("Z and X must have the same shape");
    const auto s = svd(z.transpose() * x);
    return s.u * s.v.transpose();
}

PodXResult pod_x(const Matrix& y, const Vector& rho, EmptyColumnRepair repair) {
    const Eigen::Index n = y.rows();
    const Eigen::Index k = y.cols();
    if (rho.size() != k) throw InvalidArgument("rho must have one entry per column");
    if (!y.allFinite()) throw InvalidArgument("Y has non-finite entries");
    for (Eigen::Index j = 0; j < k; ++j) {
        if (!(rho(j) > 0.0)) throw InvalidArgument("column norms must be positive");
    }
    if (k == 0 || n < k) throw PreconditionError("need at least as many rows as columns");

    std::vector<std::size_t> labels(static_cast<std::size_t>(n));
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index j = 1; j < k; ++j) {
            if (y(i, j) > y(i, best)) best = j;
        }
        labels[static_cast<std::size_t>(i)] = static_cast<std::size_t>(best);
        ++counts[static_cast<std::size_t>(best)];
    }

    PodXResult out;
    if (repair == EmptyColumnRepair::Reassign) {
        for (std::size_t col = 0; col < counts.size(); ++col) {
            if (counts[col] != 0) continue;
            Eigen::Index pick = -1;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (counts[labels[static_cast<std::size_t>(i)]] < 2) continue;
                if (pick < 0 || y(i, static_cast<Eigen::Index>(col)) > y(pick, static_cast<Eigen::Index>(col))) {
                    pick = i;
                }
            }
            const auto p = static_cast<std::size_t>(pick);
            --counts[labels[p]];
            labels[p] = col;
            counts[col] = 1;
            ++out.reassigned_rows;
        }
        out.kept_columns.resize(counts.size());
        std::iota(out.kept_columns.begin(), out.kept_columns.end(), std::size_t{0});
    } else {
        std::vector<std::size_t> remap(counts.size(), 0);
        for (std::size_t col = 0; col < counts.size(); ++col) {
            if (counts[col] == 0) continue;
            remap[col] = out.kept_columns.size();
            out.kept_columns.push_back(col);
        }
        out.shrunk = out.kept_columns.size() < counts.size();
        for (auto& label : labels) label = remap[label];
        std::vector<std::size_t> kept_counts;
        for (const auto col : out.kept_columns) kept_counts.push_back(counts[col]);
        counts = std::move(kept_counts);
    }

    Vector scales(static_cast<Eigen::Index>(out.kept_columns.size()));
    for (std::size_t j = 0; j < out.kept_columns.size(); ++j) {
        scales(static_cast<Eigen::Index>(j)) =
            rho(static_cast<Eigen::Index>(out.kept_columns[j])) / std::sqrt(static_cast<double>(counts[j]));
    }
    out.x = build(labels, scales);
    return out;
}

Matrix init_rotation(const Matrix& z) {
    const Eigen::Index n = z.rows();
    const Eigen::Index k = z.cols();
    if (k == 0 || n < k) throw PreconditionError("init_rotation needs N >= K >= 1");

    Eigen::Index first = 0;
    const Vector norms = z.rowwise().norm();
    for (Eigen::Index i = 1; i < n; ++i) {
        if (norms(i) > norms(first)) first = i;
    }
    if (norms(first) == 0.0) throw PreconditionError("Z is zero");

    Matrix q(k, k);
    q.col(0) = z.row(first).transpose() / norms(first);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(first)] = true;
    Vector last = z.row(first).transpose();
    Vector c = Vector::Zero(n);

    for (Eigen::Index col = 1; col < k; ++col) {
        c += (z * last).cwiseAbs();
        std::vector<Eigen::Index> order;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!used[static_cast<std::size_t>(i)]) order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return c(a) < c(b); });

        bool placed = false;
        for (const auto i : order) {
            const Vector row = z.row(i).transpose();
            Vector v = row;
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index j = 0; j < col; ++j) v -= q.col(j).dot(v) * q.col(j);
            }
            if (norms(i) == 0.0 || v.norm() <= 1e-10 * norms(i)) continue;
            q.col(col) = v / v.norm();
            used[static_cast<std::size_t>(i)] = true;
            last = row;
            placed = true;
            break;
        }
        if (!placed) throw PreconditionError("rows of Z span fewer than K dimensions");
    }
    return q;
}

Matrix canonical_rotation(const Vector& alphas) {
    const Eigen::Index k = alphas.size();
    if (k == 0) throw InvalidArgument("need at least one volume");
    for (Eigen::Index j = 0; j < k; ++j) {
        if (!(alphas(j) > 0.0)) throw InvalidArgument("volumes must be positive");
    }
    Matrix r(k, k);
    r.col(0) = alphas.cwiseSqrt() / std::sqrt(alphas.sum());
    for (Eigen::Index col = 1; col < k; ++col) {
        Vector v = Vector::Unit(k, col);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < col; ++j) v -= r.col(j).dot(v) * r.col(j);
        }
        r.col(col) = v / v.norm();
    }
    return r;
}

ClusterResult cluster(const WeightedGraph& g, std::size_t k, const ClusterOptions& options) {
    if (options.max_iter < 1) throw InvalidArgument("max_iter must be positive");
    KWayRelaxed relaxed = relax_k(g, k);
    Matrix z = options.rescale ? relaxed.z : relaxed.z0;
    require_full_column_rank(z, "cluster");
    const Matrix r0 = init_rotation(z);
    Matrix r = r0;

    const auto podx = [&](const Matrix& zz, const Matrix& rr) {
        const Matrix y = zz * rr;
        const Vector rho = options.normalize_columns ? Vector(y.colwise().norm().transpose())
                                                     : Vector::Ones(y.cols());
        return pod_x(y, rho, options.repair);
    };

    std::vector<AlternationStep> trace;
    std::optional<PartitionMatrix> x;
    double last_objective = std::numeric_limits<double>::infinity();
    double round_start = std::numeric_limits<double>::infinity();
    bool converged = false;
    bool stopped_on_increase = false;
    int iterations = 0;

    for (int iter = 0; iter < options.max_iter; ++iter) {
        PodXResult px = podx(z, r);
        Matrix z_next = z;
        Matrix r_next = r;
        if (px.shrunk) {
            const Matrix y = z * r;
            z_next.resize(y.rows(), static_cast<Eigen::Index>(px.kept_columns.size()));
            for (std::size_t j = 0; j < px.kept_columns.size(); ++j) {
                z_next.col(static_cast<Eigen::Index>(j)) = y.col(static_cast<Eigen::Index>(px.kept_columns[j]));
            }
            r_next = Matrix::Identity(z_next.cols(), z_next.cols());
        }
        const double obj_x = (px.x.x - z_next * r_next).norm();
        if (!px.shrunk && x && obj_x > last_objective) {
            // Row-wise argmax with renormalized columns is not an exact
            // minimizer; keep the previous pair rather than go uphill.
            stopped_on_increase = true;
            converged = true;
            break;
        }
        z = std::move(z_next);
        r = std::move(r_next);
        x = std::move(px.x);
        if (px.shrunk) round_start = std::numeric_limits<double>::infinity();
        const double cut_x = ncut(g, x->partition());
        trace.push_back({StepKind::PodX, obj_x, cut_x, x->clusters(), px.shrunk});

        r = pod_r(z, x->x);
        last_objective = (x->x - z * r).norm();
        trace.push_back({StepKind::PodR, last_objective, cut_x, x->clusters(), false});
        ++iterations;

        if (round_start - last_objective < options.tol) {
            converged = true;
            break;
        }
        round_start = last_objective;
    }

    Partition partition = x->partition();
    const double final_ncut = ncut(g, partition);
    return ClusterResult{std::move(partition), std::move(*x), std::move(relaxed), std::move(z), std::move(r), r0,
                         std::move(trace), last_objective, final_ncut, iterations, converged, stopped_on_increase};
}

std::string to_string(StepKind kind) { return kind == StepKind::PodX ? "PODX" : "PODR"; }

}  // namespace specgraph
