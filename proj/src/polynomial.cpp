#include "mconv/polynomial.hpp"

#include <cmath>

namespace mconv {

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
    return monomial(dim, MultiIndex(dim), c);
}

Polynomial Polynomial::monomial(std::size_t dim, const MultiIndex& alpha, const Rational& c) {
    if (alpha.dim() != dim) throw DimensionMismatch(alpha.dim(), dim);
    Polynomial p(dim);
    p.add_term(alpha, c);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [a, c] : coeffs_) d = std::max(d, a.order());
    return d;
}

Polynomial& Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
    if (alpha.dim() != dim_) throw DimensionMismatch(alpha.dim(), dim_);
    auto it = coeffs_.find(alpha);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

Polynomial Polynomial::plus(const Polynomial& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    Polynomial r = *this;
    for (const auto& [a, c] : o.coeffs_) r.add_term(a, c);
    return r;
}

Polynomial Polynomial::minus(const Polynomial& o) const {
    return plus(o.scaled(Rational(-1)));
}

Polynomial Polynomial::times(const Polynomial& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    Polynomial r(dim_);
    for (const auto& [a, ca] : coeffs_)
        for (const auto& [b, cb] : o.coeffs_)
            r.add_term(a.plus(b), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [a, ca] : coeffs_) r.add_term(a, ca * c);
    return r;
}

Polynomial Polynomial::derivative(const MultiIndex& mu) const {
    if (mu.dim() != dim_) throw DimensionMismatch(mu.dim(), dim_);
    Polynomial r(dim_);
    for (const auto& [a, c] : coeffs_) {
        if (!mu.leq(a)) continue;
        Rational f(1);
        // d^mu x^a = a!/(a-mu)! x^(a-mu), coordinatewise falling factorials
        for (std::size_t j = 0; j < dim_; ++j)
            f *= falling_factorial(static_cast<long>(a[j]), mu[j]);
        r.add_term(a.minus(mu), c * f);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
    if (x.size() != dim_) throw DimensionMismatch(x.size(), dim_);
    Rational s(0);
    for (const auto& [a, c] : coeffs_) {
        Rational t = c;
        for (std::size_t j = 0; j < dim_; ++j)
            t *= x[j].pow(static_cast<long>(a[j]));
        s += t;
    }
    return s;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
    if (x.size() != dim_) throw DimensionMismatch(x.size(), dim_);
    double s = 0;
    for (const auto& [a, c] : coeffs_) {
        double t = c.to_double();
        for (std::size_t j = 0; j < dim_; ++j)
            t *= std::pow(x[j], static_cast<double>(a[j]));
        s += t;
    }
    return s;
}

} // namespace mconv
