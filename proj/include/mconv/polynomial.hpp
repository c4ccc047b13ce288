#pragma once

#include <map>

#include "mconv/multi_index.hpp"
#include "mconv/rational.hpp"

namespace mconv {

// Multivariate polynomial with exact rational coefficients, stored sparsely.
// Zero coefficients are never kept, so equality is representation equality.
class Polynomial {
public:
    explicit Polynomial(std::size_t dim) : dim_(dim) {}
    static Polynomial constant(std::size_t dim, const Rational& c);
    static Polynomial monomial(std::size_t dim, const MultiIndex& alpha, const Rational& c = Rational(1));

    std::size_t dim() const { return dim_; }
    const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Max |alpha| over stored terms; 0 for the zero polynomial.
    unsigned degree() const;

    Polynomial& add_term(const MultiIndex& alpha, const Rational& c);
    Polynomial plus(const Polynomial& o) const;
    Polynomial minus(const Polynomial& o) const;
    Polynomial times(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    // Partial derivative of order mu (componentwise).
    Polynomial derivative(const MultiIndex& mu) const;

    Rational evaluate(const std::vector<Rational>& x) const;
    double evaluate(const std::vector<double>& x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t dim_;
    std::map<MultiIndex, Rational> coeffs_;
};

} // namespace mconv
