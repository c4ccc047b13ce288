#pragma once

#include <complex>
#include <map>

#include "mconv/distribution.hpp"

namespace mconv {

// Polynomial P(theta) in the operators theta_j = x_j d_j, with exact rational
// coefficients: P = sum_alpha c_alpha theta^alpha.  Equivalent presentations:
// x^m d^m form (via Stirling numbers) and a point distribution at (1,...,1)
// acting by multiplicative convolution.
class EulerOperator {
public:
    explicit EulerOperator(std::size_t dim);

    static EulerOperator make(std::size_t dim,
                              const std::vector<std::pair<MultiIndex, Rational>>& theta_terms);
    // theta_j itself.
    static EulerOperator theta(std::size_t dim, std::size_t j);
    static EulerOperator constant(std::size_t dim, const Rational& c);

    std::size_t dim() const { return dim_; }
    const std::map<MultiIndex, Rational>& theta_coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Max |alpha| over theta-terms.
    unsigned degree() const;

    EulerOperator plus(const EulerOperator& o) const;
    EulerOperator times(const EulerOperator& o) const;
    EulerOperator scaled(const Rational& c) const;

    // Coefficients of the x^beta d^beta presentation:
    //   sum_alpha c_alpha theta^alpha = sum_beta b_beta x^beta d^beta.
    std::map<MultiIndex, Rational> to_xd_form() const;
    // The distribution T with P(theta) f = T_y f(x o y) (star-multiplier form):
    //   theta^alpha contributes via x^b d^b = (-1)^|b| M_{delta_1^(b)}.
    PointDistribution to_distribution() const;
    // Inverse of to_distribution; requires support exactly {(1,...,1)}.
    static EulerOperator from_distribution(const PointDistribution& T);

    // Apply the differential operator to a polynomial (exact).
    Polynomial apply(const Polynomial& p) const;
    // Apply to a jet at one point.
    double apply_pointwise(const JetFunction& f, const std::vector<double>& x) const;

    // Symbol P(z) at a complex point (theta x^s = s x^s makes this the
    // eigenvalue on the power x^z).
    std::complex<double> symbol(const std::vector<std::complex<double>>& z) const;
    Rational symbol(const std::vector<Rational>& z) const;

    // Transpose action on distributions: (P(theta))' T with
    // theta_j' S = -d_j (x_j S).
    PointDistribution transpose_apply(const PointDistribution& T,
                                      unsigned max_order = kDefaultMaxOrder) const;

    friend bool operator==(const EulerOperator& a, const EulerOperator& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t dim_;
    std::map<MultiIndex, Rational> c_;

    void add_term(const MultiIndex& alpha, const Rational& c);
};

} // namespace mconv
