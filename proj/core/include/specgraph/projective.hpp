#pragma once

#include <cstddef>
#include <vector>

#include "specgraph/linalg.hpp"

namespace specgraph {

/// A point of ℝP^{n−1}, given by any nonzero representative.
class ProjectivePoint {
public:
    explicit ProjectivePoint(Vector rep);

    const Vector& rep() const noexcept { return rep_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(rep_.size()); }

private:
    Vector rep_;
};

/// arccos(|x·y| / (‖x‖‖y‖)) with the cosine clamped to [0, 1]; in [0, π/2].
double proj_distance(const ProjectivePoint& p, const ProjectivePoint& q);

struct AntipodalArgmin {
    std::size_t projective_index = 0;  ///< argmin of proj_distance(x, a)
    std::size_t euclidean_index = 0;   ///< argmin of ‖x − a‖₂
    double projective_distance = 0.0;
    double euclidean_distance = 0.0;
    /// Both indices name the same point up to sign.
    bool same_class = false;
};

/// Nearest element of `candidates` to unit x, both projectively and in ℝⁿ.
/// Candidates must be unit vectors and the set closed under negation
/// (InvalidArgument otherwise, checked within `tol`). Ties go to the lowest
/// index.
AntipodalArgmin antipodal_min_equivalence(const Vector& x, const std::vector<Vector>& candidates,
                                          double tol = 1e-12);

}  // namespace specgraph
