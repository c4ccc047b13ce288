#include <doctest.h>

#include <cmath>
#include <random>

#include "mconv/geometry.hpp"
#include "mconv/star.hpp"
#include "test_helpers.hpp"

using namespace mconv;
using namespace mconv::testing;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Brute-force scaling-set oracle for closed bounded boxes: intersection of
// (1/x) Y over a dense sample of X (endpoints included), per coordinate.
struct OracleInterval {
    bool empty = false;
    double lo = -kInf, hi = kInf;
};

OracleInterval oracle_coordinate(const Interval& X, const Interval& Y, int samples) {
    OracleInterval r;
    for (int s = 0; s <= samples; ++s) {
        const double x = X.lo + (X.hi - X.lo) * double(s) / double(samples);
        if (x == 0.0) {
            if (!Y.contains(0.0)) r.empty = true;
            continue;
        }
        // eta * x must lie in Y: eta in (1/x) Y, order-reversed for x < 0.
        double lo = Y.lo / x, hi = Y.hi / x;
        if (x < 0) std::swap(lo, hi);
        r.lo = std::max(r.lo, lo);
        r.hi = std::min(r.hi, hi);
        if (r.lo > r.hi) r.empty = true;
        if (r.empty) return r;
    }
    return r;
}

Interval rand_closed_interval(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    int a = num(rng), b = num(rng);
    if (a > b) std::swap(a, b);
    return Interval::closed(a / 4.0, b / 4.0);
}

} // namespace

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(2, 1, true, true), ValidationError);
    CHECK_THROWS_AS(Interval(-kInf, 1, true, true), ValidationError); // infinite must be open
    CHECK_THROWS_AS(Interval(1, 1, true, false), ValidationError);    // point must be closed
    CHECK_THROWS_AS(Interval(std::nan(""), 1, true, true), ValidationError);

    const auto i = Interval(0, 1, false, true);
    CHECK(!i.contains(0));
    CHECK(i.contains(1));
    CHECK(i.contains(0.5));
    CHECK(!i.contains(1.5));
    CHECK(Interval::whole().contains(-1e308));

    CHECK(Interval::open(0, 1).subset_of(Interval::closed(0, 1)));
    CHECK(!Interval::closed(0, 1).subset_of(Interval::open(0, 1)));
    CHECK(Interval::closed(0, 1).subset_of(Interval::closed(0, 1)));
    CHECK(Interval::point(2).subset_of(Interval::open(1, 3)));
    CHECK(Interval::open(0, 1).closure() == Interval::closed(0, 1));
    CHECK(Interval::whole().closure() == Interval::whole());
}

TEST_CASE("box basics") {
    const Box b({Interval::closed(0, 1), Interval::open(1, 2)});
    CHECK(b.dim() == 2);
    CHECK(!b.empty());
    CHECK(b.contains({0.5, 1.5}));
    CHECK(!b.contains({0.5, 2.0}));
    CHECK(b.bounded());
    CHECK(!Box::whole(2).bounded());
    CHECK(Box::empty_box(2).empty());
    CHECK_THROWS_AS(Box::empty_box(2).intervals(), ValidationError);
    CHECK(b.closure().intervals()[1] == Interval::closed(1, 2));
}

TEST_CASE("point sets deduplicate and sort") {
    const auto s = PointSet::make(1, {{2.0}, {1.0}, {2.0}});
    REQUIRE(s.points.size() == 2);
    CHECK(s.points[0][0] == 1.0);
    CHECK_THROWS_AS(PointSet::make(1, {{std::nan("")}}), ValidationError);
    CHECK_THROWS_AS(PointSet::make(2, {{1.0}}), DimensionMismatch);
}

TEST_CASE("scaling set, frozen one-dimensional cases") {
    // eta [1,2] within [2,8]  <=>  eta in [2,4].
    CHECK(v_set(Box({Interval::closed(1, 2)}), Box({Interval::closed(2, 8)})) ==
          Box({Interval::closed(2, 4)}));
    // Negative target flips the sign: eta [1,2] within [-4,-1] <=> eta in [-2,-1].
    CHECK(v_set(Box({Interval::closed(1, 2)}), Box({Interval::closed(-4, -1)})) ==
          Box({Interval::closed(-2, -1)}));
    // Symmetric target: eta [-1,1] within [-2,2] <=> |eta| <= 2.
    CHECK(v_set(Box({Interval::closed(-1, 1)}), Box({Interval::closed(-2, 2)})) ==
          Box({Interval::closed(-2, 2)}));
    // X = {0}: everything works iff 0 in Y.
    CHECK(v_set(Box({Interval::point(0)}), Box({Interval::closed(0, 1)})) == Box::whole(1));
    CHECK(v_set(Box({Interval::point(0)}), Box({Interval::closed(1, 2)})) == Box::empty_box(1));
    // 0 interior to X but not in Y: empty.
    CHECK(v_set(Box({Interval::closed(-1, 1)}), Box({Interval::closed(1, 2)})) ==
          Box::empty_box(1));
    // Half-open data: eta (0,1] within [0,1] <=> eta in [0,1].
    CHECK(v_set(Box({Interval(0, 1, false, true)}), Box({Interval::closed(0, 1)})) ==
          Box({Interval::closed(0, 1)}));
    // Unbounded X over unbounded Y: only eta = 0 fails / works as flags say.
    CHECK(v_set(Box({Interval::whole()}), Box({Interval::whole()})) == Box::whole(1));
    // eta R+ within R+ (open): eta > 0.
    CHECK(v_set(Box({Interval(0, kInf, false, false)}), Box({Interval(0, kInf, false, false)})) ==
          Box({Interval(0, kInf, false, false)}));
}

TEST_CASE("scaling set with open endpoints in the scaled set") {
    // eta (1,2) within (2,8): endpoints open, eta = 2 gives (2,4) ok; eta = 4
    // gives (4,8) ok -> [2,4] closed.
    CHECK(v_set(Box({Interval::open(1, 2)}), Box({Interval::open(2, 8)})) ==
          Box({Interval::closed(2, 4)}));
    // But closed X against open Y keeps the endpoints out.
    CHECK(v_set(Box({Interval::closed(1, 2)}), Box({Interval::open(2, 8)})) ==
          Box({Interval::open(2, 4)}));
}

TEST_CASE("scaling set of empty and whole boxes") {
    CHECK(v_set(Box::empty_box(2), Box::empty_box(2)) == Box::whole(2));
    CHECK(v_set(Box::empty_box(1), Box({Interval::closed(1, 2)})) == Box::whole(1));
    CHECK(v_set(Box({Interval::closed(1, 2)}), Box::empty_box(1)) == Box::empty_box(1));
    CHECK_THROWS_AS(v_set(Box::whole(1), Box::whole(2)), DimensionMismatch);
}

TEST_CASE("scaling set agrees with the brute-force oracle") {
    std::mt19937 rng(121);
    int checked = 0;
    for (int it = 0; it < 50; ++it) {
        const std::size_t d = 1 + (it % 3);
        std::vector<Interval> xs, ys;
        for (std::size_t j = 0; j < d; ++j) {
            xs.push_back(rand_closed_interval(rng));
            ys.push_back(rand_closed_interval(rng));
        }
        const Box X(xs), Y(ys);
        const Box got = v_set(X, Y);

        bool empty = false;
        std::vector<OracleInterval> coords;
        const int per = std::max(40, int(10000 / (d * 50)));
        for (std::size_t j = 0; j < d; ++j) {
            coords.push_back(oracle_coordinate(xs[j], ys[j], per));
            empty = empty || coords.back().empty;
        }
        if (empty) {
            CHECK(got.empty());
            continue;
        }
        REQUIRE(!got.empty());
        for (std::size_t j = 0; j < d; ++j) {
            const auto& oi = coords[j];
            const auto& gi = got.intervals()[j];
            if (std::isinf(oi.lo))
                CHECK(gi.lo_infinite());
            else
                CHECK(gi.lo == doctest::Approx(oi.lo).epsilon(1e-9));
            if (std::isinf(oi.hi))
                CHECK(gi.hi_infinite());
            else
                CHECK(gi.hi == doctest::Approx(oi.hi).epsilon(1e-9));
        }
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("admissible dilation sets for the two worked strip regions") {
    // Region: horizontal strip 1 < y < 2, any x.  Scaling it into itself
    // pins the second coordinate: V = R x {1}.
    const Box strip({Interval::whole(), Interval::open(1, 2)});
    CHECK(v_set(strip, strip) == Box({Interval::whole(), Interval::point(1)}));

    // Inner window (-2,2) x (5/4, 8/5): admissible dilations R x (4/5, 5/4).
    const Box inner({Interval::open(-2, 2), Interval::open(1.25, 1.6)});
    CHECK(u_set(inner, strip) ==
          Box({Interval::whole(), Interval::open(0.8, 1.25)}));

    // Right-half-plane variant 0 < x: dilations must keep x positive.
    const Box half_strip({Interval(0, kInf, false, false), Interval::open(1, 2)});
    CHECK(v_set(half_strip, half_strip) ==
          Box({Interval(0, kInf, false, false), Interval::point(1)}));
    const Box inner2({Interval::open(0.5, 2), Interval::open(1.25, 1.6)});
    CHECK(u_set(inner2, half_strip) ==
          Box({Interval(0, kInf, false, false), Interval::open(0.8, 1.25)}));
}

TEST_CASE("admissible dilation set preconditions") {
    const Box strip({Interval::whole(), Interval::open(1, 2)});
    // Unbounded inner region: closure not compact.
    CHECK_THROWS_AS(u_set(Box({Interval::whole(), Interval::open(1.25, 1.6)}), strip),
                    ValidationError);
    // Inner not contained in outer.
    CHECK_THROWS_AS(u_set(Box({Interval::open(-1, 1), Interval::open(0.5, 1.5)}), strip),
                    ValidationError);
    // Closure touching the outer boundary is not contained either.
    CHECK_THROWS_AS(u_set(Box({Interval::open(-1, 1), Interval::open(1, 1.5)}), strip),
                    ValidationError);
    // Empty inner region: every dilation works.
    CHECK(u_set(Box::empty_box(2), strip) == Box::whole(2));
}

TEST_CASE("multiplicative hull in one dimension is min/max") {
    const auto h = mconv_hull(PointSet::make(1, {{1.0}, {2.0}, {4.0}}));
    REQUIRE(h.points.size() == 2);
    CHECK(h.points[0][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.points[1][0] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("multiplicative hull drops geometric-mean interior points") {
    // (2,2) = geometric mean structure: log(2,2) inside the log-triangle of
    // (1,1), (4,1), (1,4)?  No - use the log-square {1,4}^2 with center (2,2).
    const auto h = mconv_hull(
        PointSet::make(2, {{1, 1}, {4, 1}, {1, 4}, {4, 4}, {2, 2}}));
    REQUIRE(h.points.size() == 4);
    CHECK(h == PointSet::make(2, {{1, 1}, {4, 1}, {1, 4}, {4, 4}}));

    // Collinear in log space: midpoint goes away.
    const auto g = mconv_hull(PointSet::make(2, {{1, 1}, {2, 2}, {4, 4}}));
    CHECK(g == PointSet::make(2, {{1, 1}, {4, 4}}));
}

TEST_CASE("multiplicative hull in three dimensions") {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({i & 1 ? 2.0 : 1.0, i & 2 ? 2.0 : 1.0, i & 4 ? 2.0 : 1.0});
    const double s = std::sqrt(2.0);
    pts.push_back({s, s, s}); // geometric mean of the cube corners
    const auto h = mconv_hull(PointSet::make(3, pts));
    CHECK(h.points.size() == 8);
}

TEST_CASE("multiplicative hull is idempotent") {
    std::mt19937 rng(122);
    std::uniform_real_distribution<double> coord(0.25, 4.0);
    for (int it = 0; it < 10; ++it) {
        const std::size_t d = 1 + (it % 3);
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 9; ++i) {
            std::vector<double> p;
            for (std::size_t j = 0; j < d; ++j) p.push_back(coord(rng));
            pts.push_back(p);
        }
        const auto h = mconv_hull(PointSet::make(d, pts));
        CHECK(mconv_hull(h) == h);
    }
}

TEST_CASE("multiplicative hull validation") {
    CHECK_THROWS_AS(mconv_hull(PointSet::make(1, {{0.0}})), ValidationError);
    CHECK_THROWS_AS(mconv_hull(PointSet::make(1, {{-1.0}})), ValidationError);
    CHECK_THROWS_AS(mconv_hull(PointSet::make(4, {{1, 1, 1, 1}})), ValidationError);
}

TEST_CASE("hull of star supports is the product of hulls") {
    std::mt19937 rng(123);
    for (int it = 0; it < 12; ++it) {
        const std::size_t d = 1 + (it % 2);
        const auto T = rand_distribution(rng, d, 3, 2, true);
        const auto S = rand_distribution(rng, d, 3, 2, true);

        auto to_doubles = [](const std::vector<std::vector<Rational>>& pts) {
            std::vector<std::vector<double>> out;
            for (const auto& p : pts) {
                std::vector<double> q;
                for (const auto& c : p) q.push_back(c.to_double());
                out.push_back(q);
            }
            return out;
        };
        const auto left = mconv_hull(PointSet::make(d, to_doubles(star(T, S).support())));

        std::vector<std::vector<double>> prods;
        for (const auto& p : T.support())
            for (const auto& q : S.support()) {
                std::vector<double> r;
                for (std::size_t j = 0; j < d; ++j) r.push_back((p[j] * q[j]).to_double());
                prods.push_back(r);
            }
        const auto right = mconv_hull(PointSet::make(d, prods));

        REQUIRE(left.points.size() == right.points.size());
        for (std::size_t k = 0; k < left.points.size(); ++k)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(left.points[k][j] == doctest::Approx(right.points[k][j]).epsilon(1e-9));
    }
}

TEST_CASE("support containment in boxes") {
    const auto T = PointDistribution::delta({Rational(3) / Rational(2)});
    CHECK(supports_in(T, Box({Interval::closed(1, 2)})));
    CHECK(!supports_in(T, Box({Interval(1.5, 2, false, true)})));
    CHECK(supports_in(PointDistribution(1), Box::empty_box(1)));
    CHECK(!supports_in(T, Box::empty_box(1)));
}
