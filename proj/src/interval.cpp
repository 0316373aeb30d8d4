#include "setbellman/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "setbellman/errors.hpp"

namespace setbellman {

namespace {

void check_ordered(const double* lo, const double* hi, Eigen::Index n, const char* what) {
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(lo[i] <= hi[i])) {
            throw validation_error(std::string(what) + ": inverted bounds at index " +
                                   std::to_string(i));
        }
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
            throw validation_error(std::string(what) + ": non-finite bound at index " +
                                   std::to_string(i));
        }
    }
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    check_ordered(&lo, &hi, 1, "interval");
}

Interval interval_scale(double alpha, Interval x) {
    if (alpha < 0.0) {
        throw validation_error("interval_scale: negative scale factor");
    }
    return {alpha * x.lo, alpha * x.hi};
}

Interval interval_add(Interval x, Interval y) { return {x.lo + y.lo, x.hi + y.hi}; }

Interval interval_min(Interval x, Interval y) {
    return {std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
}

IntervalVector::IntervalVector(Vector lo, Vector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) {
        throw dimension_error("interval vector: bound lengths differ");
    }
    check_ordered(lo_.data(), hi_.data(), lo_.size(), "interval vector");
}

bool IntervalVector::contains(const Vector& v, double tol) const {
    if (v.size() != lo_.size()) {
        throw dimension_error("interval vector containment: length mismatch");
    }
    return (v.array() >= lo_.array() - tol).all() && (v.array() <= hi_.array() + tol).all();
}

IntervalMatrix::IntervalMatrix(Matrix lo, Matrix hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.rows() != hi_.rows() || lo_.cols() != hi_.cols()) {
        throw dimension_error("interval matrix: bound shapes differ");
    }
    check_ordered(lo_.data(), hi_.data(), lo_.size(), "interval matrix");
}

bool IntervalMatrix::contains(const Matrix& m, double tol) const {
    if (m.rows() != lo_.rows() || m.cols() != lo_.cols()) {
        throw dimension_error("interval matrix containment: shape mismatch");
    }
    return (m.array() >= lo_.array() - tol).all() && (m.array() <= hi_.array() + tol).all();
}

double hausdorff_interval(const IntervalVector& x, const IntervalVector& y) {
    if (x.size() != y.size()) {
        throw dimension_error("hausdorff_interval: dimension mismatch");
    }
    const double d_lo = (x.lo() - y.lo()).lpNorm<Eigen::Infinity>();
    const double d_hi = (x.hi() - y.hi()).lpNorm<Eigen::Infinity>();
    return std::max(d_lo, d_hi);
}

namespace {

double directed_distance(const std::vector<Vector>& from, const std::vector<Vector>& to) {
    double worst = 0.0;
    for (const Vector& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const Vector& q : to) {
            best = std::min(best, (p - q).lpNorm<Eigen::Infinity>());
            if (best == 0.0) break;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_point_set(const PointSet& a, const PointSet& b) {
    if (a.points.empty() || b.points.empty()) {
        throw validation_error("hausdorff_point_set: empty point set");
    }
    const Eigen::Index n = a.points.front().size();
    for (const auto& p : a.points) {
        if (p.size() != n) throw dimension_error("hausdorff_point_set: ragged point set");
    }
    for (const auto& q : b.points) {
        if (q.size() != n) throw dimension_error("hausdorff_point_set: dimension mismatch");
    }
    return std::max(directed_distance(a.points, b.points), directed_distance(b.points, a.points));
}

double point_to_box_distance(const Vector& v, const IntervalVector& box) {
    if (v.size() != box.size()) {
        throw dimension_error("point_to_box_distance: dimension mismatch");
    }
    double dist = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double below = box.lo()[i] - v[i];
        const double above = v[i] - box.hi()[i];
        dist = std::max({dist, below, above});
    }
    return dist;
}

}  // namespace setbellman
