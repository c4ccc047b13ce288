#pragma once

#include <functional>

#include "mconv/polynomial.hpp"

namespace mconv {

// A smooth function known together with its partial derivatives up to
// max_order: eval(x, beta) returns (d^beta f)(x).  Distributions of order m
// can only be applied to jets with max_order >= m.
struct JetFunction {
    std::size_t dim = 1;
    unsigned max_order = 0;
    std::function<double(const std::vector<double>&, const MultiIndex&)> eval;

    double operator()(const std::vector<double>& x) const { return eval(x, MultiIndex(dim)); }
    double operator()(const std::vector<double>& x, const MultiIndex& beta) const { return eval(x, beta); }
};

// Exact jets for common test and transfer functions.
JetFunction jet_from_polynomial(const Polynomial& p);
// d = 1: e^x.
JetFunction jet_exp();
// d = 1: log x (x > 0).
JetFunction jet_log();
// d = 1: x^s for real s (x > 0).
JetFunction jet_power(double s);
// d = 1: (log x)^k.
JetFunction jet_log_power(unsigned k);
// dim-d: exp(c . t) as a function of t (all orders available).
JetFunction jet_exp_linear(std::size_t dim, const std::vector<double>& c);
// dim-d: product of coordinate powers prod_j x_j^{s_j} (x_j > 0).
JetFunction jet_power_product(const std::vector<double>& s);

} // namespace mconv
