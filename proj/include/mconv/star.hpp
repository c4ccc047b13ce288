#pragma once

#include "mconv/distribution.hpp"

namespace mconv {

// Multiplicative convolution (T * S)(f) = T_x(S_y f(x o y)), where o is the
// componentwise product.  Exact on point-supported distributions; the result's
// support is the componentwise product of the operand supports.
PointDistribution star(const PointDistribution& T, const PointDistribution& S,
                       unsigned max_order = kDefaultMaxOrder);

// Unit of the star algebra: delta at (1,...,1).
PointDistribution star_unit(std::size_t dim);

// The operator f(x) |-> T_y f(x o y) applied to a polynomial: monomials are
// eigenvectors with eigenvalue T(x^alpha).
Polynomial hadamard_apply(const PointDistribution& T, const Polynomial& p);

// The same operator applied to a jet at a single point x:
//   sum_terms c (-1)^|mu| x^mu (d^mu f)(x o a).
double hadamard_apply_pointwise(const PointDistribution& T, const JetFunction& f,
                                const std::vector<double>& x);

} // namespace mconv
