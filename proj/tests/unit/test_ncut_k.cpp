#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "frozen.hpp"
#include "oracles.hpp"
#include "specgraph/error.hpp"
#include "specgraph/laplacian.hpp"
#include "specgraph/ncut_k.hpp"
#include "specgraph/oracle.hpp"
#include "specgraph/random.hpp"

namespace sg = specgraph;
namespace st = specgraph::testing;

namespace {

sg::Partition from_labels(const st::Labels& labels) { return sg::Partition::from_labels(labels); }

double frob_objective(const sg::Matrix& x, const sg::Matrix& z, const sg::Matrix& r) { return (x - z * r).norm(); }

}  // namespace

TEST(PartitionMatrix, TenNodeExampleShape) {
    const sg::Partition p(10, {{1, 3, 5}, {0, 4}, {2, 7, 9}, {6, 8}});
    const auto g = st::random_corpus_graph(10, 5);
    const auto pm = sg::partition_matrix(g, p, sg::PartitionScaling::Unit);
    sg::Matrix expected(10, 4);
    expected << 0, 1, 0, 0,
                1, 0, 0, 0,
                0, 0, 1, 0,
                1, 0, 0, 0,
                0, 1, 0, 0,
                1, 0, 0, 0,
                0, 0, 0, 1,
                0, 0, 1, 0,
                0, 0, 0, 1,
                0, 0, 1, 0;
    EXPECT_EQ(pm.x, expected);
    EXPECT_EQ(pm.partition(), p);
    EXPECT_TRUE(sg::validate_partition_matrix(pm.x, sg::degrees(g)).valid());
}

TEST(PartitionMatrix, SingletonsAndDefaultScaling) {
    const auto g = sg::ring(5);
    const sg::Partition single(5, {{0}, {1}, {2}, {3}, {4}});
    EXPECT_EQ(sg::partition_matrix(g, single, sg::PartitionScaling::Unit).x, sg::Matrix::Identity(5, 5));
    const auto pm = sg::partition_matrix(g, sg::Partition(5, {{0, 1}, {2, 3, 4}}));
    const sg::Matrix xdx = pm.x.transpose() * sg::degrees(g).asDiagonal() * pm.x;
    EXPECT_LE((xdx - sg::Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-10);
    const auto unit = sg::partition_matrix(g, sg::Partition(5, {{0, 1}, {2, 3, 4}}), sg::PartitionScaling::Unit);
    EXPECT_EQ(unit.x.rowwise().sum(), sg::Vector::Ones(5));
    const auto iso = sg::parse_graph("nodes 3\n0 1\n");
    EXPECT_THROW(sg::partition_matrix(iso, sg::Partition(3, {{0, 1}, {2}})), sg::IsolatedVertexError);
}

TEST(Validate, Counterexamples) {
    const sg::Vector d = sg::degrees(sg::ring(5));
    sg::Matrix ones_first = sg::Matrix::Zero(5, 3);
    ones_first.col(0).setOnes();
    const auto r = sg::validate_partition_matrix(ones_first, d);
    EXPECT_TRUE(r.rows_sum_to_one);
    EXPECT_TRUE(r.rows_nonzero);
    EXPECT_FALSE(r.columns_nonzero);
    EXPECT_FALSE(r.projector_fixes_ones);
    EXPECT_FALSE(r.valid());

    sg::Matrix zero_row = sg::Matrix::Zero(5, 2);
    zero_row.block(0, 0, 2, 1).setOnes();
    zero_row.block(2, 1, 2, 1).setOnes();
    const auto z = sg::validate_partition_matrix(zero_row, d);
    EXPECT_FALSE(z.rows_nonzero);
    EXPECT_EQ(z.rows_nonzero_det, 0.0);
    EXPECT_FALSE(z.valid());

    sg::Matrix overlap = sg::Matrix::Zero(5, 2);
    overlap.col(0) << 1, 1, 1, 0, 0;
    overlap.col(1) << 0, 0, 1, 1, 1;
    const auto o = sg::validate_partition_matrix(overlap, d);
    EXPECT_FALSE(o.columns_orthogonal);
    EXPECT_FALSE(o.d_orthogonal);
    EXPECT_FALSE(o.valid());

    sg::Matrix mixed = sg::Matrix::Zero(5, 2);
    mixed.col(0) << 1, 2, 0, 0, 0;
    mixed.col(1) << 0, 0, 1, 1, 1;
    EXPECT_FALSE(sg::validate_partition_matrix(mixed, d).columns_two_valued);
}

TEST(Validate, AllPartitionsValidAndInvariantUnderRotation) {
    const auto g = st::random_corpus_graph(7, 17);
    const sg::Vector d = sg::degrees(g);
    sg::Rng rng(3);
    for (const auto& labels : st::reference_partitions(7, 3)) {
        const auto pm = sg::partition_matrix(g, from_labels(labels));
        const auto rep = sg::validate_partition_matrix(pm.x, d);
        EXPECT_TRUE(rep.valid());
        EXPECT_LE(rep.projector_residual, 1e-10);

        const sg::Matrix q = sg::random_orthogonal(3, rng);
        const sg::Matrix xr = pm.x * q;
        const sg::Matrix xdx = xr.transpose() * d.asDiagonal() * xr;
        EXPECT_LE((xdx - sg::Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-8);
        const sg::Vector ones = sg::Vector::Ones(7);
        const sg::Vector proj = xr * (xr.transpose() * xr).ldlt().solve(xr.transpose() * ones);
        EXPECT_LE((proj - ones).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(Mu, Examples) {
    const auto two = st::two_disjoint_triangles();
    const auto pm = sg::partition_matrix(two, sg::Partition(6, {{0, 1, 2}, {3, 4, 5}}));
    EXPECT_EQ(sg::mu(two, pm.x), 0.0);
    EXPECT_EQ(sg::epsilon(two, pm.x), 2.0);
    const auto k2 = sg::partition_matrix(sg::path(2), sg::Partition(2, {{0}, {1}}));
    EXPECT_DOUBLE_EQ(sg::mu(sg::path(2), k2.x), 2.0);
    EXPECT_DOUBLE_EQ(sg::epsilon(sg::path(2), k2.x), 0.0);
    EXPECT_THROW(sg::mu(sg::path(2), sg::Matrix::Zero(2, 1)), sg::InvalidArgument);
}

TEST(Mu, EqualsNcutExhaustively) {
    for (const auto& [name, g] : st::small_corpus(8)) {
        const sg::Vector d = sg::degrees(g);
        for (std::size_t k = 2; k <= 3; ++k) {
            const double bound = st::reference_eigenvalues(sg::normalized_laplacians(g).l_sym.matrix())
                                     .head(static_cast<Eigen::Index>(k))
                                     .sum();
            for (const auto& labels : st::reference_partitions(g.size(), k)) {
                const auto p = from_labels(labels);
                const double expected = st::reference_ncut(g.weights(), labels, k);
                for (const auto scaling : {sg::PartitionScaling::InverseSqrtVolume, sg::PartitionScaling::Unit}) {
                    const auto pm = sg::partition_matrix(g, p, scaling);
                    const double m = sg::mu(g, pm.x);
                    EXPECT_LE(std::abs(m - expected), 1e-9 * std::max(1.0, expected)) << name;
                    EXPECT_LE(std::abs(sg::mu_trace_form(g, pm.x) - m), 1e-10 * std::max(1.0, m)) << name;
                    EXPECT_NEAR(sg::epsilon(g, pm.x) + m, static_cast<double>(k), 1e-10) << name;
                    EXPECT_LE(bound, m + 1e-9) << name;
                }
            }
        }
    }
}

TEST(Mu, TraceFormUnderRotation) {
    sg::Rng rng(5);
    const auto g = st::random_corpus_graph(8, 44);
    const auto pm = sg::partition_matrix(g, sg::Partition(8, {{0, 1, 2}, {3, 4}, {5, 6, 7}}));
    const sg::Matrix xlx = pm.x.transpose() * sg::laplacian(g).matrix() * pm.x;
    EXPECT_NEAR(sg::mu_trace_form(g, pm.x), xlx.trace(), 1e-12);
    for (int t = 0; t < 10; ++t) {
        const sg::Matrix xr = pm.x * sg::random_orthogonal(3, rng);
        EXPECT_NEAR(sg::mu_trace_form(g, xr), sg::mu(g, pm.x), 1e-10);
    }
    EXPECT_THROW(sg::mu_trace_form(g, sg::Matrix::Zero(8, 2)), sg::PreconditionError);
}

TEST(RelaxK, Invariants) {
    for (const auto& [name, g] : st::small_corpus(10)) {
        for (std::size_t k = 2; k < g.size() && k <= 4; ++k) {
            const auto r = sg::relax_k(g, k);
            const auto kk = static_cast<Eigen::Index>(k);
            const sg::Vector d = sg::degrees(g);
            EXPECT_LE(sg::orthonormality_error(r.y), 1e-8) << name;
            const sg::Matrix zdz = r.z0.transpose() * d.asDiagonal() * r.z0;
            EXPECT_LE((zdz - sg::Matrix::Identity(kk, kk)).cwiseAbs().maxCoeff(), 1e-8) << name;
            const sg::Vector sd = d.cwiseSqrt();
            EXPECT_NEAR(std::abs(r.y.col(0).dot(sd / sd.norm())), 1.0, 1e-12) << name;
            EXPECT_LE((r.y * (r.y.transpose() * sd) - sd).norm(), 1e-8 * sd.norm()) << name;
            const auto bundle = sg::normalized_laplacians(g);
            const sg::Matrix& lsym = bundle.l_sym.matrix();
            const sg::Vector ref = st::reference_eigenvalues(lsym);
            EXPECT_NEAR(r.trace_value, ref.head(kk).sum(), 1e-8) << name;
            EXPECT_NEAR((r.y.transpose() * lsym * r.y).trace(), r.trace_value, 1e-8) << name;
            for (Eigen::Index j = 1; j < kk; ++j) {
                EXPECT_GT(r.z0.col(j).maxCoeff(), 0.0) << name;
                EXPECT_LT(r.z0.col(j).minCoeff(), 0.0) << name;
                EXPECT_LE(std::abs(r.z0.col(j).dot(d)), 1e-8 * d.sum()) << name;
            }
        }
    }
}

TEST(RelaxK, K2AndThreeTriangles) {
    EXPECT_THROW(sg::relax_k(sg::path(2), 2), sg::PreconditionError);
    EXPECT_NEAR(sg::relax_k(sg::path(3), 2).trace_value, 1.0, 1e-12);
    const auto g = st::three_triangles(0.01);
    const auto r = sg::relax_k(g, 3);
    EXPECT_LE(r.trace_value, st::frozen::kThreeTrianglesNcut001 + 1e-12);
    EXPECT_THROW(sg::relax_k(g, 1), sg::PreconditionError);
    EXPECT_THROW(sg::relax_k(g, 9), sg::PreconditionError);
    EXPECT_THROW(sg::relax_k(st::two_disjoint_triangles(), 2), sg::PreconditionError);
}

TEST(OrthogonalizeColumns, Properties) {
    const auto g = st::random_corpus_graph(9, 3);
    const auto r = sg::relax_k(g, 3);
    const sg::Matrix zp = sg::orthogonalize_columns(r.z0);
    const sg::Matrix gram = zp.transpose() * zp;
    EXPECT_LE((gram - sg::Matrix(gram.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-8);
    const sg::Vector d = sg::degrees(g);
    const sg::Matrix zdz = zp.transpose() * d.asDiagonal() * zp;
    EXPECT_LE((zdz - sg::Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-8);
    const sg::Matrix l = sg::laplacian(g).matrix();
    EXPECT_NEAR((zp.transpose() * l * zp).trace(), (r.z0.transpose() * l * r.z0).trace(), 1e-10);

    const sg::Matrix already = sg::Matrix::Identity(5, 3) * 2.0;
    const sg::Matrix same = sg::orthogonalize_columns(already);
    for (Eigen::Index j = 0; j < 3; ++j) {
        Eigen::Index best = 0;
        const double m = (already.transpose() * same.col(j)).cwiseAbs().maxCoeff(&best);
        EXPECT_NEAR(m, 4.0, 1e-12);
    }
    EXPECT_THROW(sg::orthogonalize_columns(sg::Matrix::Ones(5, 2)), sg::PreconditionError);
}

TEST(Rescale, OnesInSpan) {
    const auto g = st::random_corpus_graph(8, 9);
    const auto r = sg::relax_k(g, 3);
    const sg::Matrix z = sg::rescale_columns(r.z0);
    EXPECT_LE((z.rowwise().sum() - sg::Vector::Ones(8)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((r.z.rowwise().sum() - sg::Vector::Ones(8)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_THROW(sg::rescale_columns(sg::Matrix::Zero(4, 2)), sg::PreconditionError);
}

TEST(Rescale, RelaxedZKeepsEveryColumn) {
    for (const auto& g : {st::three_triangles(0.01), sg::ring(9), st::random_corpus_graph(9, 4)}) {
        const auto r = sg::relax_k(g, 3);
        // The literal formula on Z0 keeps only the constant column.
        EXPECT_LE(sg::rescale_columns(r.z0).rightCols(2).norm(), 1e-10);
        const sg::Vector d = g.weights().rowwise().sum();
        const sg::Matrix gram = r.z.transpose() * d.asDiagonal() * r.z;
        const double s = gram(0, 0);
        EXPECT_GT(s, 0.0);
        EXPECT_LE((gram - s * sg::Matrix::Identity(3, 3)).norm(), 1e-10);
        EXPECT_LE((r.z.rowwise().sum() - sg::Vector::Ones(9)).cwiseAbs().maxCoeff(), 1e-10);
        for (Eigen::Index j = 0; j < 3; ++j) EXPECT_GT(r.z.col(j).norm(), 0.1);
    }
}

TEST(Rescale, K2NormalEquations) {
    const auto r = sg::relax_k(sg::path(3), 2);
    const sg::Matrix& z0 = r.z0;
    const double a = z0.col(0).squaredNorm();
    const double b = z0.col(0).dot(z0.col(1));
    const double c = z0.col(1).squaredNorm();
    const double det = a * c - b * b;
    const double s0 = z0.col(0).sum();
    const double s1 = z0.col(1).sum();
    const sg::Vector lambda = sg::rescale_weights(z0);
    EXPECT_NEAR(lambda(0), (c * s0 - b * s1) / det, 1e-12);
    EXPECT_NEAR(lambda(1), (a * s1 - b * s0) / det, 1e-12);
}

TEST(Rescale, LeastSquaresCertificate) {
    sg::Rng rng(101);
    std::normal_distribution<double> noise(0.0, 0.05);
    for (int t = 0; t < 10; ++t) {
        const sg::Matrix z0 = sg::random_gaussian(10, 3, rng);
        const sg::Vector lambda = sg::rescale_weights(z0);
        const sg::Vector ones = sg::Vector::Ones(10);
        const double best = (z0 * lambda - ones).norm();
        for (int s = 0; s < 100; ++s) {
            sg::Vector pert = lambda;
            for (Eigen::Index j = 0; j < 3; ++j) pert(j) += noise(rng);
            EXPECT_LE(best, (z0 * pert - ones).norm() + 1e-12);
        }
    }
}

TEST(PodR, Examples) {
    sg::Rng rng(111);
    const sg::Matrix z = sg::random_gaussian(9, 3, rng);
    const sg::Matrix r_id = sg::pod_r(z, z);
    EXPECT_LE((r_id - sg::Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LE(frob_objective(z, z, r_id), 1e-8);

    const sg::Matrix q0 = sg::random_orthogonal(3, rng);
    const sg::Matrix r = sg::pod_r(z, z * q0);
    EXPECT_LE((r - q0).cwiseAbs().maxCoeff(), 1e-8);

    const sg::Matrix x = sg::random_gaussian(9, 3, rng);
    const sg::Matrix rx = sg::pod_r(z, x);
    EXPECT_LE(sg::orthonormality_error(rx), 1e-10);
    const sg::Vector sv = st::reference_singular_values(z.transpose() * x);
    EXPECT_NEAR((rx.transpose() * z.transpose() * x).trace(), sv.sum(), 1e-8);
    const double at_r = frob_objective(x, z, rx);
    for (int t = 0; t < 200; ++t) EXPECT_LE(at_r, frob_objective(x, z, sg::random_orthogonal(3, rng)) + 1e-8);
    EXPECT_THROW(sg::pod_r(z, sg::Matrix::Zero(9, 2)), sg::InvalidArgument);
}

TEST(PodX, BlocksAndTies) {
    sg::Matrix y(4, 2);
    y << 0.9, 0.1, 0.8, 0.2, 0.1, 0.7, 0.5, 0.5;
    const auto r = sg::pod_x(y, sg::Vector::Ones(2));
    EXPECT_EQ(r.x.labels, (std::vector<std::size_t>{0, 0, 1, 0}));
    EXPECT_EQ(r.reassigned_rows, 0U);
    EXPECT_NEAR(r.x.x.col(0).norm(), 1.0, 1e-15);
    EXPECT_NEAR(r.x.x.col(1).norm(), 1.0, 1e-15);
    const auto scaled = sg::pod_x(y, (sg::Vector(2) << 3.0, 0.5).finished());
    EXPECT_NEAR(scaled.x.x.col(0).norm(), 3.0, 1e-15);
    EXPECT_NEAR(scaled.x.x.col(1).norm(), 0.5, 1e-15);
    EXPECT_THROW(sg::pod_x(y, sg::Vector::Zero(2)), sg::InvalidArgument);
}

TEST(PodX, EmptyColumnRepair) {
    sg::Matrix y(4, 2);
    y << 1.0, 0.0, 0.9, 0.1, 0.8, 0.3, 0.7, 0.2;
    const auto re = sg::pod_x(y, sg::Vector::Ones(2), sg::EmptyColumnRepair::Reassign);
    EXPECT_EQ(re.x.labels, (std::vector<std::size_t>{0, 0, 1, 0}));
    EXPECT_EQ(re.reassigned_rows, 1U);
    EXPECT_FALSE(re.shrunk);
    EXPECT_TRUE(sg::validate_partition_matrix(re.x.x, sg::Vector::Ones(4)).valid());

    const auto sh = sg::pod_x(y, sg::Vector::Ones(2), sg::EmptyColumnRepair::Shrink);
    EXPECT_TRUE(sh.shrunk);
    EXPECT_EQ(sh.kept_columns, (std::vector<std::size_t>{0}));
    EXPECT_EQ(sh.x.clusters(), 1U);
    EXPECT_TRUE(sg::validate_partition_matrix(sh.x.x, sg::Vector::Ones(4)).valid());
}

TEST(PodX, TraceIsSumOfChosenEntries) {
    sg::Rng rng(121);
    for (int t = 0; t < 20; ++t) {
        const sg::Matrix y = sg::random_gaussian(8, 3, rng);
        const auto r = sg::pod_x(y, sg::Vector::Ones(3));
        double expected = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            const auto row = static_cast<Eigen::Index>(i);
            const auto j = static_cast<Eigen::Index>(r.x.labels[i]);
            expected += r.x.scales(j) * y(row, j);
            if (r.reassigned_rows == 0) EXPECT_EQ(y(row, j), y.row(row).maxCoeff());
        }
        EXPECT_NEAR((r.x.x * y.transpose()).trace(), expected, 1e-12);
    }
}

TEST(InitRotation, PicksOneRowPerBlock) {
    sg::Matrix z = sg::Matrix::Zero(6, 3);
    z.block(0, 0, 2, 1).setConstant(2.0);
    z.block(2, 1, 2, 1).setConstant(1.5);
    z.block(4, 2, 2, 1).setConstant(1.0);
    const sg::Matrix r = sg::init_rotation(z);
    EXPECT_LE(sg::orthonormality_error(r), 1e-12);
    EXPECT_LE((r - sg::Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InitRotation, OrthonormalAndDegenerate) {
    const sg::Matrix one = (sg::Matrix(3, 1) << 0.5, -2.0, 1.0).finished();
    EXPECT_NEAR(std::abs(sg::init_rotation(one)(0, 0)), 1.0, 1e-15);
    sg::Rng rng(131);
    for (int t = 0; t < 20; ++t) {
        EXPECT_LE(sg::orthonormality_error(sg::init_rotation(sg::random_gaussian(10, 4, rng))), 1e-8);
    }
    sg::Matrix flat = sg::Matrix::Zero(5, 2);
    flat.col(0).setOnes();
    EXPECT_THROW(sg::init_rotation(flat), sg::PreconditionError);
}

TEST(CanonicalRotation, Examples) {
    const sg::Matrix r = sg::canonical_rotation(sg::Vector::Ones(2));
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(r(0, 0), s, 1e-15);
    EXPECT_NEAR(r(1, 0), s, 1e-15);
    // Second column is fixed only up to sign.
    EXPECT_NEAR(std::abs(r(0, 1)), s, 1e-15);
    EXPECT_NEAR(r(0, 1), -r(1, 1), 1e-15);
    EXPECT_LE(sg::orthonormality_error(r), 1e-15);

    const sg::Matrix r3 = sg::canonical_rotation(sg::Vector::Constant(3, 4.0));
    EXPECT_LE((r3.col(0) - sg::Vector::Constant(3, 1.0 / std::sqrt(3.0))).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_THROW(sg::canonical_rotation((sg::Vector(2) << 1, 0).finished()), sg::InvalidArgument);
}

TEST(CanonicalRotation, ConstantFirstColumn) {
    for (int t = 0; t < 10; ++t) {
        const auto g = st::random_corpus_graph(8, static_cast<std::uint64_t>(500 + t));
        const auto p = sg::Partition(8, {{0, 3}, {1, 4, 6}, {2, 5, 7}});
        const auto pm = sg::partition_matrix(g, p);
        sg::Vector alphas(3);
        for (std::size_t j = 0; j < 3; ++j) alphas(static_cast<Eigen::Index>(j)) = sg::vol(g, p.block(j));
        const sg::Matrix xr = pm.x * sg::canonical_rotation(alphas);
        const double c0 = xr(0, 0);
        EXPECT_LE((xr.col(0).array() - c0).abs().maxCoeff(), 1e-12);
        EXPECT_NEAR(c0, 1.0 / std::sqrt(alphas.sum()), 1e-12);
        const sg::Matrix gram = xr.transpose() * sg::degrees(g).asDiagonal() * xr;
        EXPECT_LE((gram - sg::Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Cluster, ThreeTrianglesAllModes) {
    const auto g = st::three_triangles(0.01);
    const auto oracle = sg::brute_ncut(g, 3);
    EXPECT_NEAR(oracle.best_value, st::frozen::kThreeTrianglesNcut001, 1e-12);
    for (const auto repair : {sg::EmptyColumnRepair::Reassign, sg::EmptyColumnRepair::Shrink}) {
        for (const bool rescale : {false, true}) {
            sg::ClusterOptions opts;
            opts.repair = repair;
            opts.rescale = rescale;
            const auto r = sg::cluster(g, 3, opts);
            EXPECT_EQ(r.partition, sg::Partition(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
            EXPECT_NEAR(r.ncut, oracle.best_value, 1e-12);
            EXPECT_TRUE(r.converged);
        }
    }
}

TEST(Cluster, TraceIsMonotoneBetweenShrinks) {
    for (const auto& [name, g] : st::small_corpus(10)) {
        for (std::size_t k = 2; k < g.size() && k <= 4; ++k) {
            for (const auto repair : {sg::EmptyColumnRepair::Reassign, sg::EmptyColumnRepair::Shrink}) {
                sg::ClusterOptions opts;
                opts.repair = repair;
                const auto r = sg::cluster(g, k, opts);
                ASSERT_FALSE(r.trace.empty()) << name;
                for (std::size_t i = 1; i < r.trace.size(); ++i) {
                    if (r.trace[i].shrunk) continue;
                    EXPECT_LE(r.trace[i].objective, r.trace[i - 1].objective + 1e-9) << name << " k=" << k;
                }
                EXPECT_NEAR(r.ncut, sg::ncut(g, r.partition), 1e-12) << name;
                EXPECT_TRUE(sg::validate_partition_matrix(r.x.x, sg::degrees(g)).valid()) << name;
                EXPECT_LE(r.iterations, opts.max_iter);
                EXPECT_LE(sg::orthonormality_error(r.rotation), 1e-8) << name;
                EXPECT_LE(sg::orthonormality_error(r.initial_rotation), 1e-8) << name;
                if (repair == sg::EmptyColumnRepair::Reassign) EXPECT_EQ(r.partition.block_count(), k) << name;
            }
        }
    }
}

TEST(Cluster, KNearNAndPreconditions) {
    for (const auto& [name, g] : st::small_corpus(7)) {
        if (g.size() < 3) continue;
        const auto r = sg::cluster(g, g.size() - 1);
        EXPECT_LE(r.iterations, 100) << name;
        EXPECT_EQ(r.partition.size(), g.size()) << name;
    }
    EXPECT_THROW(sg::cluster(st::two_disjoint_triangles(), 2), sg::PreconditionError);
    sg::ClusterOptions bad;
    bad.max_iter = 0;
    EXPECT_THROW(sg::cluster(sg::ring(6), 2, bad), sg::InvalidArgument);
}

TEST(Cluster, Deterministic) {
    const auto g = st::random_corpus_graph(10, 77);
    const auto a = sg::cluster(g, 3);
    const auto b = sg::cluster(g, 3);
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_EQ(a.trace.size(), b.trace.size());
    EXPECT_EQ(sg::to_string(sg::StepKind::PodX), "PODX");
    EXPECT_EQ(sg::to_string(sg::StepKind::PodR), "PODR");
}
