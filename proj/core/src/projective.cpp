#include "specgraph/projective.hpp"

#include <algorithm>
#include <cmath>

#include "specgraph/error.hpp"

namespace specgraph {

ProjectivePoint::ProjectivePoint(Vector rep) : rep_(std::move(rep)) {
    if (rep_.size() == 0 || !rep_.allFinite() || rep_.norm() == 0.0) {
        throw InvalidArgument("projective point needs a finite nonzero representative");
    }
}

double proj_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.dimension() != q.dimension()) throw InvalidArgument("projective points of different dimension");
    // Half-angle form stays accurate near 0, where acos of the cosine loses
    // half the digits.
    const Vector x = p.rep().normalized();
    const Vector y = x.dot(q.rep()) < 0.0 ? Vector(-q.rep().normalized()) : q.rep().normalized();
    return 2.0 * std::atan2((x - y).norm(), (x + y).norm());
}

AntipodalArgmin antipodal_min_equivalence(const Vector& x, const std::vector<Vector>& candidates, double tol) {
    if (candidates.empty()) throw InvalidArgument("candidate set is empty");
    if (std::abs(x.norm() - 1.0) > 1e-9) throw InvalidArgument("x must be a unit vector");
    for (const auto& a : candidates) {
        if (a.size() != x.size()) throw InvalidArgument("candidate has the wrong dimension");
        if (std::abs(a.norm() - 1.0) > 1e-9) throw InvalidArgument("candidates must be unit vectors");
        const bool has_negation = std::any_of(candidates.begin(), candidates.end(),
                                              [&](const Vector& b) { return (a + b).cwiseAbs().maxCoeff() <= tol; });
        if (!has_negation) throw InvalidArgument("candidate set is not closed under negation");
    }

    const ProjectivePoint px(x);
    AntipodalArgmin out;
    out.projective_distance = proj_distance(px, ProjectivePoint(candidates[0]));
    out.euclidean_distance = (x - candidates[0]).norm();
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double dp = proj_distance(px, ProjectivePoint(candidates[i]));
        const double de = (x - candidates[i]).norm();
        if (dp < out.projective_distance) {
            out.projective_distance = dp;
            out.projective_index = i;
        }
        if (de < out.euclidean_distance) {
            out.euclidean_distance = de;
            out.euclidean_index = i;
        }
    }
    const Vector& a = candidates[out.projective_index];
    const Vector& b = candidates[out.euclidean_index];
    out.same_class = std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff()) <= tol;
    return out;
}

}  // namespace specgraph
