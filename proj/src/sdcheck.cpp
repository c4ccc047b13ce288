#include "mconv/sdcheck.hpp"

#include <cmath>
#include <limits>

namespace mconv {

namespace {

double radical_inverse(unsigned base, unsigned long i) {
    double r = 0, f = 1.0 / base;
    while (i > 0) {
        r += f * (i % base);
        i /= base;
        f /= base;
    }
    return r;
}

// i-th Halton point in [-1,1]^d, d <= 3.
std::vector<double> halton_cube(std::size_t d, unsigned long i) {
    static const unsigned bases[3] = {2, 3, 5};
    std::vector<double> p(d);
    for (std::size_t j = 0; j < d; ++j)
        p[j] = 2.0 * radical_inverse(bases[j], i + 1) - 1.0;
    return p;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

int default_grid(std::size_t d) {
    switch (d) {
        case 1: return 40;
        case 2: return 12;
        default: return 6;
    }
}

} // namespace

const char* to_string(SDVerdict v) {
    switch (v) {
        case SDVerdict::pass: return "pass";
        case SDVerdict::fail: return "fail";
        default: return "inconclusive";
    }
}

SDReport slowly_decreasing_check(const PointDistribution& T, const SDConfig& config) {
    const std::size_t d = T.dim();
    if (d > 3) throw ValidationError("slowly-decreasing check supports dimension <= 3");
    if (!(config.a > 0)) throw ValidationError("parameter a must be positive");
    if (config.b && !(*config.b > 0)) throw ValidationError("parameter b must be positive");
    if (config.c && !(*config.c >= 0)) throw ValidationError("parameter c must be non-negative");
    if (!(config.x_max > 0)) throw ValidationError("x_max must be positive");
    if (config.samples < 8) throw ValidationError("sample budget too small");
    if (!T.support_positive())
        throw ValidationError("slowly-decreasing check requires support in the positive orthant");

    SDReport rep;
    rep.a = config.a;
    rep.c = config.c ? *config.c : 2.0 * (T.order() + 1);

    if (T.is_zero()) {
        rep.verdict = SDVerdict::fail;
        rep.b = config.b.value_or(0.0);
        rep.note = "zero distribution: characteristic function vanishes identically";
        return rep;
    }

    const int grid = config.x_grid > 0 ? config.x_grid : default_grid(d);
    const double step = 2.0 * config.x_max / grid;

    // midpoint grid per coordinate, never hits x = 0 where the ball degenerates
    std::vector<double> axis(grid);
    for (int i = 0; i < grid; ++i) axis[i] = -config.x_max + (i + 0.5) * step;

    auto score = [&](const std::vector<double>& y) {
        std::vector<std::complex<double>> z(d);
        for (std::size_t j = 0; j < d; ++j) z[j] = std::complex<double>(y[j], 0.0);
        const double cv = std::abs(char_function(T, z));
        return std::pair<double, double>(cv, cv * std::pow(1.0 + norm2(y), rep.c));
    };

    double min_margin = std::numeric_limits<double>::infinity();

    std::vector<std::uint32_t> bound(d, static_cast<std::uint32_t>(grid - 1));
    for_each_leq(bound, [&](const MultiIndex& gi) {
        std::vector<double> x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = axis[gi[j]];
        const double r = config.a * std::log1p(norm2(x));

        SDSample best;
        best.x = x;
        best.radius = r;
        auto consider = [&](const std::vector<double>& y) {
            auto [cv, m] = score(y);
            if (m > best.margin || best.y.empty()) {
                best.y = y;
                best.char_abs = cv;
                best.margin = m;
            }
        };

        consider(x); // centre is always admissible
        unsigned long accepted = 0, tried = 0;
        const unsigned long budget = static_cast<unsigned long>(config.samples);
        while (accepted < budget && tried < 20 * budget) {
            auto u = halton_cube(d, tried++);
            if (norm2(u) > 1.0) continue;
            ++accepted;
            std::vector<double> y(d);
            for (std::size_t j = 0; j < d; ++j) y[j] = x[j] + r * u[j];
            consider(y);
        }
        // local refinement around the incumbent, shrinking radius, clipped to the ball
        double rr = r * 0.25;
        for (int round = 0; round < config.refine_rounds; ++round, rr *= 0.25) {
            const std::vector<double> centre = best.y;
            for (unsigned long i = 0; i < budget / 4 + 1; ++i) {
                auto u = halton_cube(d, i);
                if (norm2(u) > 1.0) continue;
                std::vector<double> y(d);
                for (std::size_t j = 0; j < d; ++j) y[j] = centre[j] + rr * u[j];
                std::vector<double> diff(d);
                for (std::size_t j = 0; j < d; ++j) diff[j] = y[j] - x[j];
                if (norm2(diff) > r) continue;
                consider(y);
            }
        }

        min_margin = std::min(min_margin, best.margin);
        rep.samples.push_back(std::move(best));
    });

    rep.min_margin = min_margin;
    if (config.b) {
        rep.b = *config.b;
        for (auto& s : rep.samples) s.ok = s.margin >= rep.b;
        if (min_margin >= rep.b) {
            rep.verdict = SDVerdict::pass;
            rep.note = "witnesses found for every grid point at the given (a, b, c)";
        } else if (min_margin >= 0.5 * rep.b) {
            rep.verdict = SDVerdict::inconclusive;
            rep.note = "weakest margin within a factor 2 of b; a larger sample "
                       "budget may settle the verdict";
        } else {
            rep.verdict = SDVerdict::fail;
            rep.note = "no witness found at some grid points (semi-decision: "
                       "this does not prove the condition fails)";
        }
    } else {
        rep.b_tuned = true;
        if (min_margin > 0 && std::isfinite(min_margin)) {
            rep.b = 0.5 * min_margin;
            for (auto& s : rep.samples) s.ok = s.margin >= rep.b;
            rep.verdict = SDVerdict::pass;
            rep.note = "b tuned to half the weakest observed margin";
        } else {
            rep.b = 0;
            rep.verdict = SDVerdict::fail;
            rep.note = "observed margins collapse to zero; no usable b exists "
                       "at this sampling budget";
        }
    }
    return rep;
}

} // namespace mconv
