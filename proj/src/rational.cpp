#include "mconv/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace mconv {

Rational::Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

double Rational::to_double() const {
    // mpq_get_d rounds toward zero.  Truncate first, then decide the last ulp
    // by comparing against the exact midpoint of the two candidate doubles.
    const double t = v_.get_d();
    if (!std::isfinite(t) || v_ == mpq_class(t)) return t;
    const bool neg = sgn(v_) < 0;
    const mpq_class a = neg ? mpq_class(-v_) : v_;
    const double ta = neg ? -t : t;
    const double up = std::nextafter(ta, std::numeric_limits<double>::infinity());
    if (std::isinf(up)) return neg ? -ta : ta;
    const mpq_class mid = (mpq_class(ta) + mpq_class(up)) / 2;
    const int c = cmp(a, mid);
    double r = ta;
    if (c > 0) {
        r = up;
    } else if (c == 0) { // exact tie: pick the even significand
        std::uint64_t bits;
        std::memcpy(&bits, &ta, sizeof bits);
        if (bits & 1u) r = up;
    }
    return neg ? -r : r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

namespace {

bool valid_rational_literal(const std::string& s) {
    // [-]digits or [-]digits/[-]digits, nothing else; GMP would accept
    // whitespace and other bases, we do not.
    std::size_t i = 0, slash = std::string::npos;
    if (s.empty()) return false;
    auto digits = [&](std::size_t from, std::size_t to, bool allow_sign) {
        if (from >= to) return false;
        if (allow_sign && s[from] == '-') ++from;
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    slash = s.find('/');
    if (slash == std::string::npos) return digits(i, s.size(), true);
    // The sign lives on the numerator; denominators are positive integers.
    return digits(i, slash, true) && digits(slash + 1, s.size(), false);
}

} // namespace

Rational Rational::from_string(const std::string& s) {
    if (!valid_rational_literal(s))
        throw ValidationError("bad rational literal: '" + s + "'");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ValidationError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0)
        throw ValidationError("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x))
        throw ValidationError("cannot convert non-finite double to rational");
    mpq_class v(x); // exact binary expansion
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero rational");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational falling_factorial(long s, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= Rational(s - static_cast<long>(i));
    return r;
}

std::complex<double> falling_factorial(std::complex<double> s, unsigned k) {
    std::complex<double> r(1.0, 0.0);
    for (unsigned i = 0; i < k; ++i) r *= (s - static_cast<double>(i));
    return r;
}

std::vector<Rational> rationals_from_strings(const std::vector<std::string>& parts) {
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(Rational::from_string(p));
    return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.to_double());
    return out;
}

} // namespace mconv
