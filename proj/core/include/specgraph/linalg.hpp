#pragma once

#include <Eigen/Dense>

namespace specgraph {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

/// ‖QᵀQ − I‖ measured as the largest absolute entry.
inline double orthonormality_error(const Matrix& q) {
    if (q.cols() == 0) return 0.0;
    const Matrix gram = q.transpose() * q;
    return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace specgraph
