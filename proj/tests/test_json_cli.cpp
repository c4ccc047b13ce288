#include <doctest.h>

#include <random>

#include "mconv/json_io.hpp"
#include "test_helpers.hpp"

using namespace mconv;
using namespace mconv::testing;

TEST_CASE("rational serialization") {
    CHECK(to_json(Rational(3) / Rational(4)) == ojson("3/4"));
    CHECK(rational_from_json(ojson("3/4")) == Rational(3) / Rational(4));
    CHECK(rational_from_json(ojson(-7)) == Rational(-7)); // plain integers accepted
    CHECK_THROWS_AS(rational_from_json(ojson(1.5)), ValidationError);
    CHECK_THROWS_AS(rational_from_json(parse_json("\"1/0\"")), ValidationError);
}

TEST_CASE("malformed json is a validation error") {
    CHECK_THROWS_AS(parse_json("{"), ValidationError);
    CHECK_THROWS_AS(parse_json(""), ValidationError);
    CHECK_NOTHROW(parse_json("{\"a\": [1, 2]}"));
}

TEST_CASE("distribution round trip is byte-stable") {
    std::mt19937 rng(141);
    for (int i = 0; i < 15; ++i) {
        const auto T = rand_distribution(rng, 1 + (i % 2), 3, 3, false);
        const auto j = to_json(T);
        const auto back = distribution_from_json(j);
        CHECK(back == T);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("distribution schema errors") {
    CHECK_THROWS_AS(distribution_from_json(parse_json("{}")), ValidationError);
    CHECK_THROWS_AS(distribution_from_json(parse_json("{\"dim\": 0, \"terms\": []}")),
                    ValidationError);
    CHECK_THROWS_AS(distribution_from_json(parse_json(
                        "{\"dim\": 1, \"terms\": [{\"point\": [\"1\"], \"mu\": [0]}]}")),
                    ValidationError); // missing coef
    CHECK_THROWS_AS(distribution_from_json(parse_json(
                        "{\"dim\": 1, \"terms\": [{\"point\": [\"1\", \"2\"], \"mu\": [0], "
                        "\"coef\": \"1\"}]}")),
                    ValidationError); // point length != dim
}

TEST_CASE("euler operator round trip") {
    std::mt19937 rng(142);
    for (int i = 0; i < 10; ++i) {
        const auto P = rand_euler(rng, 1 + (i % 2), 4);
        const auto j = to_json(P);
        CHECK(operator_from_json(j) == P);
        CHECK(to_json(operator_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("series table round trip") {
    const auto T = PointDistribution::delta_derivative({Rational(2)}, MultiIndex({1}));
    const auto S = moment_table(T, {4});
    const auto j = to_json(S);
    CHECK(series_from_json(j) == S);
    CHECK(to_json(series_from_json(j)).dump() == j.dump());
}

TEST_CASE("transform round trip") {
    const auto T = PointDistribution::delta_derivative({Rational(1), Rational(3)},
                                                       MultiIndex({1, 0}), Rational(2));
    const auto F = cauchy_transform(T);
    const auto j = to_json(F);
    const auto back = transform_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    // Same values too.
    const std::vector<std::complex<double>> z = {{0.3, 0.1}, {0.2, -0.4}};
    CHECK(std::abs(F.evaluate(z) - back.evaluate(z)) < 1e-15);
}

TEST_CASE("intervals and boxes, including infinite endpoints") {
    const auto j = to_json(Interval::whole());
    CHECK(j["lo"] == ojson("-inf"));
    CHECK(j["hi"] == ojson("inf"));
    CHECK(interval_from_json(j) == Interval::whole());

    const Box b({Interval(0, 1, false, true), Interval::point(2)});
    CHECK(box_from_json(to_json(b)) == b);
    CHECK(to_json(box_from_json(to_json(b))).dump() == to_json(b).dump());

    const auto e = Box::empty_box(3);
    CHECK(box_from_json(to_json(e)) == e);

    CHECK_THROWS_AS(interval_from_json(parse_json("{\"lo\": 2, \"hi\": 1, \"lo_closed\": true, "
                                                  "\"hi_closed\": true}")),
                    ValidationError);
    CHECK_THROWS_AS(interval_from_json(parse_json("{\"lo\": \"abc\", \"hi\": 1, \"lo_closed\": "
                                                  "true, \"hi_closed\": true}")),
                    ValidationError);
}

TEST_CASE("point sets and grids") {
    const auto s = PointSet::make(2, {{1.0, 2.0}, {0.5, 0.25}});
    CHECK(pointset_from_json(to_json(s)) == s);

    GridFunction g(1.0, 2.0, 8);
    g.values = {0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    const auto j = to_json(g);
    const auto back = grid_from_json(j);
    CHECK(back.r == g.r);
    CHECK(back.R == g.R);
    CHECK(back.n == g.n);
    CHECK(back.values == g.values); // double round trip must be exact
    CHECK_THROWS_AS(grid_from_json(parse_json("{\"r\": 1.0, \"R\": 2.0, \"n\": 8, \"values\": "
                                              "[0, 1]}")),
                    ValidationError);
}

TEST_CASE("sd report serialization") {
    SDConfig cfg;
    cfg.samples = 60;
    cfg.x_grid = 8;
    cfg.b = 1.0;
    cfg.c = 0.0;
    const auto rep = slowly_decreasing_check(PointDistribution::delta({Rational(2)}), cfg);
    const auto j = to_json(rep);
    CHECK(j["verdict"] == ojson("pass"));
    CHECK(j["b"] == ojson(1.0));
    CHECK(j["b_tuned"] == ojson(false));
    CHECK(j.contains("min_margin"));
    REQUIRE(j["samples"].is_array());
    REQUIRE(!j["samples"].empty());
    const auto& s0 = j["samples"][0];
    for (const char* key : {"x", "y", "char_abs", "margin", "radius", "ok"})
        CHECK(s0.contains(key));
}

TEST_CASE("canonical ordering makes equal inputs serialize identically") {
    // Same distribution assembled in two different term orders.
    const PointDistribution::Term t1{{Rational(2)}, MultiIndex({1}), Rational(1)};
    const PointDistribution::Term t2{{Rational(3)}, MultiIndex({0}), Rational(5)};
    const auto a = PointDistribution::make(1, {t1, t2});
    const auto b = PointDistribution::make(1, {t2, t1});
    CHECK(to_json(a).dump() == to_json(b).dump());
}
