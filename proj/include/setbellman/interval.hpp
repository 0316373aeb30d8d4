#pragma once

#include <Eigen/Dense>
#include <vector>

namespace setbellman {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Closed real interval [lo, hi]. Degenerate intervals (lo == hi) are
/// first-class and stand for singleton sets.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_);

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// [alpha*lo, alpha*hi]; defined for alpha >= 0 only.
Interval interval_scale(double alpha, Interval x);

/// [x.lo + y.lo, x.hi + y.hi].
Interval interval_add(Interval x, Interval y);

/// Smallest interval containing {min(u, v) : u in x, v in y}, which is
/// [min(x.lo, y.lo), min(x.hi, y.hi)].
Interval interval_min(Interval x, Interval y);

/// Axis-aligned box in R^n given by per-coordinate bounds, lo <= hi.
class IntervalVector {
public:
    IntervalVector() = default;
    IntervalVector(Vector lo, Vector hi);

    /// Box collapsed onto a single point.
    static IntervalVector degenerate(const Vector& v) { return {v, v}; }

    const Vector& lo() const { return lo_; }
    const Vector& hi() const { return hi_; }
    Eigen::Index size() const { return lo_.size(); }

    bool contains(const Vector& v, double tol = 0.0) const;

private:
    Vector lo_, hi_;
};

/// Entrywise interval bounds on an m x n matrix, lo <= hi.
class IntervalMatrix {
public:
    IntervalMatrix(Matrix lo, Matrix hi);

    static IntervalMatrix degenerate(const Matrix& m) { return {m, m}; }

    const Matrix& lo() const { return lo_; }
    const Matrix& hi() const { return hi_; }
    Eigen::Index rows() const { return lo_.rows(); }
    Eigen::Index cols() const { return lo_.cols(); }

    bool contains(const Matrix& m, double tol = 0.0) const;

private:
    Matrix lo_, hi_;
};

/// Finite non-empty collection of points in R^n.
struct PointSet {
    std::vector<Vector> points;
};

/// Hausdorff distance between two boxes under the sup norm. Reduces to
/// max(||x.lo - y.lo||_inf, ||x.hi - y.hi||_inf).
double hausdorff_interval(const IntervalVector& x, const IntervalVector& y);

/// Exact Hausdorff distance between finite point sets under the sup norm.
double hausdorff_point_set(const PointSet& a, const PointSet& b);

/// inf over the box of ||v - w||_inf; zero when v lies inside.
double point_to_box_distance(const Vector& v, const IntervalVector& box);

}  // namespace setbellman
