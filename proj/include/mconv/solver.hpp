#pragma once

#include "mconv/euler.hpp"
#include "mconv/jet.hpp"

namespace mconv {

// Samples of a function on the log-uniform grid x_k = r (R/r)^(k/(n-1)),
// equivalently uniform nodes in t = log x.
struct GridFunction {
    double r = 1, R = 2;
    int n = 0;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(double r_, double R_, int n_);

    double t0() const;
    double tstep() const;     // uniform step in t
    double node(int k) const; // x_k
    static GridFunction sample(const JetFunction& f, double r, double R, int n);
};

// Finite-difference weights for the k-th derivative at x0 from the given
// nodes (Fornberg's recursion); exact for polynomials of degree < #nodes.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, unsigned k);

// Running integral of uniformly sampled data: F[k] = integral over the first
// k steps by a cubic rule (exact on cubics, O(h^4) overall, smooth error).
std::vector<double> cumulative_integral(const std::vector<double>& q, double h);

// Particular solution of P(theta) u = f on (r, R), sampled on the log-uniform
// grid: substituting t = log x turns P(theta) into a constant-coefficient ODE
// that is solved by a chain of first-order (and conjugate-pair) stages with
// cumulative quadrature.  P must be one-dimensional with nonzero leading part.
GridFunction solve_euler(const EulerOperator& P, const JetFunction& f, double r, double R, int n);
GridFunction solve_euler(const EulerOperator& P, const GridFunction& f);

// Max over interior grid nodes of |P(theta) u - f|, with theta = d/dt applied
// through finite-difference stencils (order >= 6) on the t-grid.
double residual(const EulerOperator& P, const GridFunction& u, const JetFunction& f);
double residual(const EulerOperator& P, const GridFunction& u, const GridFunction& f);

} // namespace mconv
