#include "specgraph/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "specgraph/error.hpp"

namespace specgraph {

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = normal(rng);
    }
    return m;
}

Matrix random_orthonormal(std::size_t rows, std::size_t cols, Rng& rng) {
    if (cols > rows) throw InvalidArgument("random_orthonormal needs cols <= rows");
    const Matrix g = random_gaussian(rows, cols, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
    const Matrix r = qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

Matrix random_orthogonal(std::size_t n, Rng& rng) { return random_orthonormal(n, n, rng); }

Matrix random_symmetric(std::size_t n, Rng& rng) {
    const Matrix g = random_gaussian(n, n, rng);
    return 0.5 * (g + g.transpose());
}

Vector random_unit_vector(std::size_t n, Rng& rng) {
    Vector v = random_gaussian(n, 1, rng).col(0);
    while (v.norm() == 0.0) v = random_gaussian(n, 1, rng).col(0);
    return v / v.norm();
}

WeightedGraph random_graph(std::size_t n, double density, Rng& rng, bool binary) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    Matrix w = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < w.cols(); ++j) {
            if (unit(rng) < density) {
                w(i, j) = w(j, i) = binary ? 1.0 : weight(rng);
            }
        }
    }
    return WeightedGraph(std::move(w));
}

WeightedGraph random_connected_graph(std::size_t n, double density, Rng& rng, bool binary) {
    Matrix w = random_graph(n, density, rng, binary).weights();
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Eigen::Index a = order[k];
        const Eigen::Index b = order[k + 1];
        if (w(a, b) == 0.0) w(a, b) = w(b, a) = binary ? 1.0 : weight(rng);
    }
    return WeightedGraph(std::move(w));
}

}  // namespace specgraph
