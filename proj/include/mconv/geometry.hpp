#pragma once

#include "mconv/distribution.hpp"

namespace mconv {

// One-dimensional interval with open/closed endpoint flags.  Always nonempty;
// emptiness lives at the Box level.  Infinite endpoints must be open, a
// degenerate interval (lo == hi) must be closed on both sides and finite.
struct Interval {
    double lo = 0, hi = 0;
    bool lo_closed = true, hi_closed = true;

    Interval() = default;
    Interval(double lo_, double hi_, bool lo_closed_, bool hi_closed_);

    static Interval closed(double a, double b) { return {a, b, true, true}; }
    static Interval open(double a, double b) { return {a, b, false, false}; }
    static Interval point(double a) { return {a, a, true, true}; }
    static Interval whole();

    bool is_point() const { return lo == hi; }
    bool lo_infinite() const;
    bool hi_infinite() const;
    bool contains(double x) const;
    // Set containment this <= o with flag awareness.
    bool subset_of(const Interval& o) const;
    Interval closure() const { return {lo, hi, !lo_infinite(), !hi_infinite()}; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// Axis-aligned box: product of intervals, or the empty set (flagged).
class Box {
public:
    explicit Box(std::vector<Interval> intervals);
    static Box empty_box(std::size_t dim);
    static Box whole(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool empty() const { return empty_; }
    // Valid only for nonempty boxes.
    const std::vector<Interval>& intervals() const;

    bool contains(const std::vector<double>& x) const;
    Box closure() const;
    // Every endpoint finite (closure is compact).
    bool bounded() const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    Box(std::size_t dim, bool empty) : dim_(dim), empty_(empty) {}
    std::size_t dim_;
    bool empty_;
    std::vector<Interval> iv_;
};

// Finite set of points, deduplicated and sorted lexicographically.
struct PointSet {
    std::size_t dim = 1;
    std::vector<std::vector<double>> points;

    static PointSet make(std::size_t dim, std::vector<std::vector<double>> pts);
    friend bool operator==(const PointSet&, const PointSet&) = default;
};

// Scaling set {eta : eta o X subset of Y} (componentwise product).  Always a
// box (possibly empty, possibly unbounded); computed exactly in rational
// arithmetic, endpoints rounded to double on output.
Box v_set(const Box& X, const Box& Y);

// Admissible dilation set for a region pair: v_set(closure(omega_prime), omega)
// with the precondition that closure(omega_prime) is compact and contained in
// omega (checked per coordinate).
Box u_set(const Box& omega_prime, const Box& omega);

// Multiplicative convex hull: Exp of the convex hull of Log(points);
// returns the vertex set.  All coordinates must be strictly positive;
// dimension <= 3.
PointSet mconv_hull(const PointSet& X);

// True when every support point of T lies in B (floating-point comparison,
// endpoint flags honoured).  Empty support is contained in anything.
bool supports_in(const PointDistribution& T, const Box& B);

} // namespace mconv
