#include "mconv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>

namespace mconv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Interval::Interval(double lo_, double hi_, bool lo_closed_, bool hi_closed_)
    : lo(lo_), hi(hi_), lo_closed(lo_closed_), hi_closed(hi_closed_) {
    if (std::isnan(lo) || std::isnan(hi)) throw ValidationError("interval endpoint is NaN");
    if (!(lo <= hi)) throw ValidationError("interval endpoints out of order");
    if (lo_infinite() && lo_closed) throw ValidationError("infinite endpoint must be open");
    if (hi_infinite() && hi_closed) throw ValidationError("infinite endpoint must be open");
    if (lo == hi && !(lo_closed && hi_closed))
        throw ValidationError("degenerate interval must be closed");
}

Interval Interval::whole() { return Interval(-kInf, kInf, false, false); }

bool Interval::lo_infinite() const { return std::isinf(lo); }
bool Interval::hi_infinite() const { return std::isinf(hi); }

bool Interval::contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

bool Interval::subset_of(const Interval& o) const {
    const bool lo_ok = o.lo < lo || (o.lo == lo && (o.lo_closed || !lo_closed));
    const bool hi_ok = o.hi > hi || (o.hi == hi && (o.hi_closed || !hi_closed));
    return lo_ok && hi_ok;
}

Box::Box(std::vector<Interval> intervals)
    : dim_(intervals.size()), empty_(false), iv_(std::move(intervals)) {
    if (dim_ == 0) throw ValidationError("dimension must be at least 1");
}

Box Box::empty_box(std::size_t dim) {
    if (dim == 0) throw ValidationError("dimension must be at least 1");
    return Box(dim, true);
}

Box Box::whole(std::size_t dim) {
    return Box(std::vector<Interval>(dim, Interval::whole()));
}

const std::vector<Interval>& Box::intervals() const {
    if (empty_) throw ValidationError("empty box has no intervals");
    return iv_;
}

bool Box::contains(const std::vector<double>& x) const {
    if (x.size() != dim_) throw DimensionMismatch(x.size(), dim_);
    if (empty_) return false;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!iv_[j].contains(x[j])) return false;
    return true;
}

Box Box::closure() const {
    if (empty_) return *this;
    std::vector<Interval> c;
    c.reserve(dim_);
    for (const auto& i : iv_) c.push_back(i.closure());
    return Box(std::move(c));
}

bool Box::bounded() const {
    if (empty_) return true;
    for (const auto& i : iv_)
        if (i.lo_infinite() || i.hi_infinite()) return false;
    return true;
}

PointSet PointSet::make(std::size_t dim, std::vector<std::vector<double>> pts) {
    if (dim == 0) throw ValidationError("dimension must be at least 1");
    for (const auto& p : pts) {
        if (p.size() != dim) throw DimensionMismatch(p.size(), dim);
        for (double v : p)
            if (!std::isfinite(v)) throw ValidationError("point coordinate must be finite");
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    PointSet s;
    s.dim = dim;
    s.points = std::move(pts);
    return s;
}

// ---------------------------------------------------------------------------
// scaling sets, exact rational internals

namespace {

// Extended rational: finite value or one of the two infinities.
struct XRat {
    int cls = 0; // -1, 0, +1
    Rational v;

    static XRat ninf() { return {-1, Rational(0)}; }
    static XRat pinf() { return {+1, Rational(0)}; }
    static XRat fin(Rational r) { return {0, std::move(r)}; }
};

int xcmp(const XRat& a, const XRat& b) {
    if (a.cls != b.cls) return a.cls < b.cls ? -1 : 1;
    if (a.cls != 0) return 0;
    return a.v < b.v ? -1 : (a.v == b.v ? 0 : 1);
}

// k * a for k != 0.
XRat xmul(const Rational& k, const XRat& a) {
    if (a.cls == 0) return XRat::fin(k * a.v);
    return (k.sign() > 0) == (a.cls > 0) ? XRat::pinf() : XRat::ninf();
}

struct RatInterval {
    XRat lo, hi;
    bool lo_closed = false, hi_closed = false;

    static RatInterval from(const Interval& i) {
        RatInterval r;
        r.lo = std::isinf(i.lo) ? XRat::ninf() : XRat::fin(Rational::from_double(i.lo));
        r.hi = std::isinf(i.hi) ? XRat::pinf() : XRat::fin(Rational::from_double(i.hi));
        r.lo_closed = i.lo_closed;
        r.hi_closed = i.hi_closed;
        return r;
    }
};

// Image eta * I, exact.
RatInterval scale_interval(const Rational& eta, const RatInterval& I) {
    RatInterval r;
    if (eta.is_zero()) {
        r.lo = r.hi = XRat::fin(Rational(0));
        r.lo_closed = r.hi_closed = true;
        return r;
    }
    if (eta.sign() > 0) {
        r.lo = xmul(eta, I.lo);
        r.hi = xmul(eta, I.hi);
        r.lo_closed = I.lo_closed;
        r.hi_closed = I.hi_closed;
    } else {
        r.lo = xmul(eta, I.hi);
        r.hi = xmul(eta, I.lo);
        r.lo_closed = I.hi_closed;
        r.hi_closed = I.lo_closed;
    }
    return r;
}

bool rat_subset(const RatInterval& a, const RatInterval& b) {
    const int cl = xcmp(b.lo, a.lo);
    const bool lo_ok = cl < 0 || (cl == 0 && (b.lo_closed || !a.lo_closed));
    const int ch = xcmp(b.hi, a.hi);
    const bool hi_ok = ch > 0 || (ch == 0 && (b.hi_closed || !a.hi_closed));
    return lo_ok && hi_ok;
}

// {eta : eta I subset J}, exact; nullopt = empty.
std::optional<Interval> v_set_coordinate(const Interval& Iv, const Interval& Jv) {
    const RatInterval I = RatInterval::from(Iv);
    const RatInterval J = RatInterval::from(Jv);

    auto admissible = [&](const Rational& eta) { return rat_subset(scale_interval(eta, I), J); };

    // The scaling set is an interval whose finite endpoints are quotients of a
    // finite J endpoint by a finite nonzero I endpoint, or 0.  Test the
    // predicate at every candidate and between/beyond them.
    std::set<Rational> cand;
    cand.insert(Rational(0));
    for (const XRat* s : {&I.lo, &I.hi}) {
        if (s->cls != 0 || s->v.is_zero()) continue;
        for (const XRat* c : {&J.lo, &J.hi})
            if (c->cls == 0) cand.insert(c->v / s->v);
    }
    std::vector<Rational> cs(cand.begin(), cand.end());

    // sample points: below, candidates, midpoints, above; flag which are candidates
    std::vector<std::pair<Rational, int>> pts; // (value, candidate index or -1)
    pts.emplace_back(cs.front() - Rational(1), -1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        pts.emplace_back(cs[i], static_cast<int>(i));
        if (i + 1 < cs.size())
            pts.emplace_back((cs[i] + cs[i + 1]) / Rational(2), -1);
    }
    pts.emplace_back(cs.back() + Rational(1), -1);

    std::vector<bool> ok(pts.size());
    std::ptrdiff_t first = -1, last = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ok[i] = admissible(pts[i].first);
        if (ok[i]) {
            if (first < 0) first = static_cast<std::ptrdiff_t>(i);
            last = static_cast<std::ptrdiff_t>(i);
        }
    }
    if (first < 0) return std::nullopt;
    for (std::ptrdiff_t i = first; i <= last; ++i)
        if (!ok[i]) throw Error("internal: scaling set is not an interval");

    double lo, hi;
    bool lo_closed, hi_closed;
    if (first == 0) {
        lo = -kInf;
        lo_closed = false;
    } else {
        // leftmost admissible sample: a candidate (closed) or a gap point whose
        // left candidate neighbour failed (open at that candidate)
        const auto& [val, ci] = pts[static_cast<std::size_t>(first)];
        if (ci >= 0) {
            lo = val.to_double();
            lo_closed = true;
        } else {
            lo = pts[static_cast<std::size_t>(first - 1)].first.to_double();
            lo_closed = false;
        }
    }
    if (last == static_cast<std::ptrdiff_t>(pts.size()) - 1) {
        hi = kInf;
        hi_closed = false;
    } else {
        const auto& [val, ci] = pts[static_cast<std::size_t>(last)];
        if (ci >= 0) {
            hi = val.to_double();
            hi_closed = true;
        } else {
            hi = pts[static_cast<std::size_t>(last + 1)].first.to_double();
            hi_closed = false;
        }
    }
    return Interval(lo, hi, lo_closed, hi_closed);
}

} // namespace

Box v_set(const Box& X, const Box& Y) {
    if (X.dim() != Y.dim()) throw DimensionMismatch(X.dim(), Y.dim());
    if (X.empty()) return Box::whole(X.dim());
    if (Y.empty()) return Box::empty_box(X.dim());
    std::vector<Interval> out;
    out.reserve(X.dim());
    for (std::size_t j = 0; j < X.dim(); ++j) {
        auto s = v_set_coordinate(X.intervals()[j], Y.intervals()[j]);
        if (!s) return Box::empty_box(X.dim());
        out.push_back(*s);
    }
    return Box(std::move(out));
}

Box u_set(const Box& omega_prime, const Box& omega) {
    if (omega_prime.dim() != omega.dim())
        throw DimensionMismatch(omega_prime.dim(), omega.dim());
    if (omega_prime.empty()) return Box::whole(omega_prime.dim());
    if (!omega_prime.bounded())
        throw ValidationError("closure of the inner region is not compact");
    if (omega.empty())
        throw ValidationError("inner region is not contained in the outer region");
    const Box cl = omega_prime.closure();
    for (std::size_t j = 0; j < cl.dim(); ++j)
        if (!cl.intervals()[j].subset_of(omega.intervals()[j]))
            throw ValidationError("closure of the inner region is not contained in the outer region");
    return v_set(cl, omega);
}

// ---------------------------------------------------------------------------
// multiplicative hull

namespace {

// Least-squares check: is p a convex combination of q (k <= d+1 points)?
bool convex_combination(const std::vector<std::vector<double>>& q,
                        const std::vector<double>& p, double tol) {
    const std::size_t d = p.size(), k = q.size();
    // A: (d+1) x k with affine row of ones; solve A^T A lambda = A^T rhs
    std::vector<std::vector<double>> A(d + 1, std::vector<double>(k));
    std::vector<double> rhs(d + 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = q[i][j];
        rhs[j] = p[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[d][i] = 1.0;
    rhs[d] = 1.0;

    std::vector<std::vector<double>> G(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = 0; r <= d; ++r) G[i][j] += A[r][i] * A[r][j];
        for (std::size_t r = 0; r <= d; ++r) G[i][k] += A[r][i] * rhs[r];
    }
    // Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
        if (std::abs(G[piv][col]) < 1e-13) return false; // affinely dependent subset
        std::swap(G[col], G[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = G[r][col] / G[col][col];
            for (std::size_t cc = col; cc <= k; ++cc) G[r][cc] -= f * G[col][cc];
        }
    }
    std::vector<double> lambda(k);
    for (std::size_t i = 0; i < k; ++i) lambda[i] = G[i][k] / G[i][i];

    for (double l : lambda)
        if (l < -tol) return false;
    double scale = 1.0;
    for (const auto& row : q)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (double v : p) scale = std::max(scale, std::abs(v));
    for (std::size_t r = 0; r <= d; ++r) {
        double s = 0;
        for (std::size_t i = 0; i < k; ++i) s += A[r][i] * lambda[i];
        if (std::abs(s - rhs[r]) > tol * scale) return false;
    }
    return true;
}

// Enumerate size-k subsets of idx, invoking fn until it returns true.
bool for_each_subset(const std::vector<std::size_t>& idx, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) return fn(pick);
        for (std::size_t i = start; i + (k - depth) <= idx.size(); ++i) {
            pick[depth] = idx[i];
            if (rec(i + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Vertices of the convex hull of pts (already deduplicated), d <= 3:
// a point is a non-vertex iff it is a convex combination of at most d+1 of
// the remaining points.
std::vector<std::vector<double>> hull_vertices(const std::vector<std::vector<double>>& pts,
                                               std::size_t d) {
    const double tol = 1e-12;
    if (pts.size() <= 1) return pts;
    if (d == 1) {
        auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
        std::vector<std::vector<double>> out{*mn};
        if (*mx != *mn) out.push_back(*mx);
        return out;
    }
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(j);
        bool interior = false;
        for (std::size_t k = 1; k <= d + 1 && !interior; ++k) {
            if (others.size() < k) break;
            interior = for_each_subset(others, k, [&](const std::vector<std::size_t>& sub) {
                std::vector<std::vector<double>> q;
                q.reserve(sub.size());
                for (auto s : sub) q.push_back(pts[s]);
                return convex_combination(q, pts[i], tol);
            });
        }
        if (!interior) out.push_back(pts[i]);
    }
    return out;
}

} // namespace

PointSet mconv_hull(const PointSet& X) {
    if (X.dim > 3) throw ValidationError("hull supports dimension <= 3");
    for (const auto& p : X.points)
        for (double v : p)
            if (!(v > 0)) throw ValidationError("hull requires strictly positive coordinates");
    if (X.points.empty()) return X;

    std::vector<std::vector<double>> logs;
    logs.reserve(X.points.size());
    for (const auto& p : X.points) {
        std::vector<double> lp(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) lp[j] = std::log(p[j]);
        logs.push_back(std::move(lp));
    }
    std::sort(logs.begin(), logs.end());
    logs.erase(std::unique(logs.begin(), logs.end()), logs.end());

    auto verts = hull_vertices(logs, X.dim);
    std::vector<std::vector<double>> out;
    out.reserve(verts.size());
    for (const auto& v : verts) {
        std::vector<double> p(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) p[j] = std::exp(v[j]);
        out.push_back(std::move(p));
    }
    return PointSet::make(X.dim, std::move(out));
}

bool supports_in(const PointDistribution& T, const Box& B) {
    if (T.dim() != B.dim()) throw DimensionMismatch(T.dim(), B.dim());
    for (const auto& p : T.support())
        if (!B.contains(to_doubles(p))) return false;
    return true;
}

} // namespace mconv
