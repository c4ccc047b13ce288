#pragma once

#include <optional>

#include "mconv/transforms.hpp"

namespace mconv {

// Configuration for the slowly-decreasing check.  b and c unset mean: tune b
// from the observed margins, default c to 2*(order+1).  x_grid 0 picks a
// per-dimension default (40 / 12 / 6 points per coordinate for d = 1 / 2 / 3).
struct SDConfig {
    double a = 2.0;
    std::optional<double> b;
    std::optional<double> c;
    double x_max = 50.0;
    int x_grid = 0;
    int samples = 1000;
    int refine_rounds = 3;
};

enum class SDVerdict { pass, fail, inconclusive };

// Best witness found for one grid point x: max of |char(y)| (1+|y|)^c over
// the sampled ball |y - x| <= a log(1+|x|).
struct SDSample {
    std::vector<double> x;
    std::vector<double> y;      // argmax
    double char_abs = 0;        // |char function| at y
    double margin = 0;          // char_abs * (1+|y|)^c
    double radius = 0;          // ball radius at x
    bool ok = false;            // margin >= b
};

struct SDReport {
    SDVerdict verdict = SDVerdict::fail;
    double a = 0, b = 0, c = 0; // effective values (b possibly tuned)
    bool b_tuned = false;
    double min_margin = 0;
    std::vector<SDSample> samples;
    std::string note;
};

const char* to_string(SDVerdict v);

// Semi-decision procedure: "pass" reports a numerically found family of
// witnesses, "fail"/"inconclusive" mean no witness was found at this sampling
// budget (no proof of failure).  Requires support in the open positive orthant.
SDReport slowly_decreasing_check(const PointDistribution& T, const SDConfig& config = {});

} // namespace mconv
