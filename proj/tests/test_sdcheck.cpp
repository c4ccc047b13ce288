#include <doctest.h>

#include "mconv/sdcheck.hpp"

using namespace mconv;

namespace {

SDConfig quick() {
    SDConfig cfg;
    cfg.samples = 120;
    cfg.x_grid = 12;
    return cfg;
}

} // namespace

TEST_CASE("point masses pass with (b, c) = (1, 0)") {
    for (const char* a : {"1/2", "1", "2", "10"}) {
        auto cfg = quick();
        cfg.a = 1.0;
        cfg.b = 1.0;
        cfg.c = 0.0;
        const auto rep = slowly_decreasing_check(
            PointDistribution::delta({Rational::from_string(a)}), cfg);
        CHECK(rep.verdict == SDVerdict::pass);
        // |a^{-iy}| = 1 identically, so every margin is exactly 1.
        CHECK(rep.min_margin == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(!rep.b_tuned);
    }
}

TEST_CASE("margin exactly 1 drives the verdict boundaries") {
    // For T = delta_1 the characteristic function is identically 1: the
    // verdict depends only on where b sits relative to 1.
    const auto T = PointDistribution::delta({Rational(1)});
    auto cfg = quick();
    cfg.a = 1.0;
    cfg.c = 0.0;

    cfg.b = 1.0;
    CHECK(slowly_decreasing_check(T, cfg).verdict == SDVerdict::pass);
    cfg.b = 1.5; // 1 >= b/2 but < b
    CHECK(slowly_decreasing_check(T, cfg).verdict == SDVerdict::inconclusive);
    cfg.b = 3.0; // 1 < b/2
    CHECK(slowly_decreasing_check(T, cfg).verdict == SDVerdict::fail);
}

TEST_CASE("difference of nearby point masses still passes with a >= 1") {
    // T = delta_1 - delta_e: T-hat(y) = 1 - e^{-iy log e} = 1 - e^{-iy(1+eps)}.
    // Balls of radius log(1+|x|) always contain a point with margin >= 1/2.
    const auto e = Rational::from_double(2.718281828459045);
    const auto T = PointDistribution::delta({Rational(1)})
                       .plus(PointDistribution::delta({e}).scaled(Rational(-1)));
    SDConfig cfg;
    cfg.a = 1.0;
    cfg.b = 0.5;
    cfg.c = 0.0;
    cfg.samples = 400;
    const auto rep = slowly_decreasing_check(T, cfg);
    CHECK(rep.verdict == SDVerdict::pass);
    CHECK(rep.min_margin >= 0.5);
    for (const auto& s : rep.samples) {
        CHECK(s.ok);
        CHECK(s.radius > 0.0);
        CHECK(s.margin >= s.char_abs - 1e-12); // c = 0: margin == |char|
    }
}

TEST_CASE("zero distribution never passes") {
    auto cfg = quick();
    cfg.b = 1.0;
    const auto rep = slowly_decreasing_check(PointDistribution(1), cfg);
    CHECK(rep.verdict == SDVerdict::fail);
    CHECK(!rep.note.empty());
}

TEST_CASE("b tuning from observed margins") {
    auto cfg = quick();
    CHECK(!cfg.b.has_value());
    const auto rep = slowly_decreasing_check(PointDistribution::delta({Rational(2)}), cfg);
    CHECK(rep.verdict == SDVerdict::pass);
    CHECK(rep.b_tuned);
    CHECK(rep.b > 0.0);
    CHECK(rep.b <= rep.min_margin);
}

TEST_CASE("default c is 2 (order + 1)") {
    auto cfg = quick();
    cfg.b = 0.1;
    const auto T = PointDistribution::delta_derivative({Rational(1)}, MultiIndex({1}));
    const auto rep = slowly_decreasing_check(T, cfg);
    CHECK(rep.c == 4.0);
    const auto rep0 = slowly_decreasing_check(PointDistribution::delta({Rational(2)}), cfg);
    CHECK(rep0.c == 2.0);
}

TEST_CASE("two-dimensional check runs") {
    auto cfg = quick();
    cfg.a = 1.0;
    cfg.b = 1.0;
    cfg.c = 0.0;
    cfg.samples = 60;
    cfg.x_grid = 5;
    const auto T = PointDistribution::delta({Rational(2), Rational(3)});
    const auto rep = slowly_decreasing_check(T, cfg);
    CHECK(rep.verdict == SDVerdict::pass);
    REQUIRE(!rep.samples.empty());
    CHECK(rep.samples.front().x.size() == 2);
}

TEST_CASE("configuration and support validation") {
    const auto T = PointDistribution::delta({Rational(2)});
    SDConfig bad;
    bad.a = 0.0;
    CHECK_THROWS_AS(slowly_decreasing_check(T, bad), ValidationError);
    bad = SDConfig{};
    bad.b = -1.0;
    CHECK_THROWS_AS(slowly_decreasing_check(T, bad), ValidationError);
    bad = SDConfig{};
    bad.c = -2.0;
    CHECK_THROWS_AS(slowly_decreasing_check(T, bad), ValidationError);
    bad = SDConfig{};
    bad.x_max = 0.0;
    CHECK_THROWS_AS(slowly_decreasing_check(T, bad), ValidationError);
    bad = SDConfig{};
    bad.samples = 4;
    CHECK_THROWS_AS(slowly_decreasing_check(T, bad), ValidationError);

    CHECK_THROWS_AS(slowly_decreasing_check(PointDistribution::delta({Rational(-2)}), SDConfig{}),
                    ValidationError);
    std::vector<Rational> p4(4, Rational(1));
    CHECK_THROWS_AS(slowly_decreasing_check(PointDistribution::delta(p4), SDConfig{}),
                    ValidationError);
}

TEST_CASE("verdict names") {
    CHECK(std::string(to_string(SDVerdict::pass)) == "pass");
    CHECK(std::string(to_string(SDVerdict::fail)) == "fail");
    CHECK(std::string(to_string(SDVerdict::inconclusive)) == "inconclusive");
}
