#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mconv/errors.hpp"

namespace mconv {

// Arbitrary-precision rational, always kept in canonical form (reduced, positive
// denominator).  Thin wrapper over GMP's mpq_class; adds strict string parsing,
// exact double conversion and ordering helpers.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, literals read naturally
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" in base 10 (whitespace rejected).
    static Rational from_string(const std::string& s);
    // Exact binary expansion of a finite double.
    static Rational from_double(double x);

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    // Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;
    Rational inverse() const;

    // Correctly rounded (nearest, ties to even); mpq_get_d alone truncates.
    double to_double() const;
    // "p" or "p/q", canonical.
    std::string to_string() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// n! as an exact rational.
Rational factorial(unsigned n);
// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);
// Falling factorial s(s-1)...(s-k+1) with integer start.
Rational falling_factorial(long s, unsigned k);
// Falling factorial with complex start, for symbol/transform evaluation.
std::complex<double> falling_factorial(std::complex<double> s, unsigned k);

std::vector<Rational> rationals_from_strings(const std::vector<std::string>& parts);
std::vector<double> to_doubles(const std::vector<Rational>& xs);

} // namespace mconv
