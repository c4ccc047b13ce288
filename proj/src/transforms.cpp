#include "mconv/transforms.hpp"

#include <cmath>

namespace mconv {

void RationalTransform::add_term(TransformTerm t) {
    if (t.factors.size() != dim_) throw DimensionMismatch(t.factors.size(), dim_);
    if (t.coef.is_zero()) return;
    terms_.push_back(std::move(t));
}

std::complex<double> RationalTransform::evaluate(const std::vector<std::complex<double>>& z) const {
    if (z.size() != dim_) throw DimensionMismatch(z.size(), dim_);
    std::complex<double> s(0.0, 0.0);
    for (const auto& t : terms_) {
        std::complex<double> v(t.coef.to_double(), 0.0);
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto& f = t.factors[j];
            const double a = f.pole.to_double();
            const std::complex<double> den = 1.0 - a * z[j];
            if (std::abs(den) < 1e-14 * (1.0 + std::abs(a * z[j])))
                throw NumericError("evaluation point is on (or too close to) a pole");
            std::complex<double> num(1.0, 0.0);
            for (unsigned i = 0; i < f.num_power; ++i) num *= z[j];
            std::complex<double> dp(1.0, 0.0);
            for (unsigned i = 0; i < f.den_power; ++i) dp *= den;
            v *= num / dp;
        }
        s += v;
    }
    return s;
}

SeriesTable::SeriesTable(std::size_t dim, std::vector<std::uint32_t> max_degree)
    : dim_(dim), max_degree_(std::move(max_degree)) {
    if (dim_ == 0) throw ValidationError("dimension must be at least 1");
    if (max_degree_.size() != dim_) throw DimensionMismatch(max_degree_.size(), dim_);
    std::size_t n = 1;
    for (auto m : max_degree_) {
        if (m > 10000) throw ValidationError("series degree too large");
        n *= static_cast<std::size_t>(m) + 1;
        if (n > (1u << 24)) throw ValidationError("series table too large");
    }
    data_.assign(n, Rational(0));
}

std::size_t SeriesTable::index(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_) throw DimensionMismatch(alpha.dim(), dim_);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (alpha[j] > max_degree_[j])
            throw ValidationError("series index " + alpha.to_string() + " out of range");
        idx = idx * (static_cast<std::size_t>(max_degree_[j]) + 1) + alpha[j];
    }
    return idx;
}

const Rational& SeriesTable::at(const MultiIndex& alpha) const { return data_[index(alpha)]; }

void SeriesTable::set(const MultiIndex& alpha, const Rational& v) { data_[index(alpha)] = v; }

void SeriesTable::for_each(const std::function<void(const MultiIndex&, const Rational&)>& fn) const {
    for_each_leq(max_degree_, [&](const MultiIndex& a) { fn(a, data_[index(a)]); });
}

RationalTransform cauchy_transform(const PointDistribution& T) {
    RationalTransform F(T.dim());
    for (const auto& [k, c] : T.terms()) {
        TransformTerm t;
        t.coef = c;
        if (k.mu.order() % 2 == 1) t.coef = -t.coef;
        for (std::size_t j = 0; j < T.dim(); ++j) {
            // d^m_xi (1 - xi z)^-1 = m! z^m (1 - xi z)^-(m+1)
            t.coef *= factorial(k.mu[j]);
            t.factors.push_back(TransformFactor{k.point[j], k.mu[j], k.mu[j] + 1});
        }
        F.add_term(std::move(t));
    }
    return F;
}

SeriesTable taylor_coefficients(const RationalTransform& F,
                                const std::vector<std::uint32_t>& max_degree) {
    SeriesTable S(F.dim(), max_degree);
    for_each_leq(max_degree, [&](const MultiIndex& alpha) {
        Rational s(0);
        for (const auto& t : F.terms()) {
            Rational v = t.coef;
            for (std::size_t j = 0; j < F.dim(); ++j) {
                const auto& f = t.factors[j];
                // [z^p] z^m (1 - a z)^-n = C(n-1+p-m, n-1) a^(p-m) for p >= m
                if (alpha[j] < f.num_power) { v = Rational(0); break; }
                const unsigned p = alpha[j] - f.num_power;
                v *= binomial(f.den_power - 1 + p, f.den_power - 1);
                v *= f.pole.pow(static_cast<long>(p));
            }
            s += v;
        }
        S.set(alpha, s);
    });
    return S;
}

SeriesTable moment_table(const PointDistribution& T, const std::vector<std::uint32_t>& max_degree) {
    SeriesTable S(T.dim(), max_degree);
    for_each_leq(max_degree, [&](const MultiIndex& alpha) { S.set(alpha, T.moment(alpha)); });
    return S;
}

SeriesTable hadamard_product(const SeriesTable& A, const SeriesTable& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch(A.dim(), B.dim());
    std::vector<std::uint32_t> md(A.dim());
    for (std::size_t j = 0; j < A.dim(); ++j)
        md[j] = std::min(A.max_degree()[j], B.max_degree()[j]);
    SeriesTable S(A.dim(), md);
    for_each_leq(md, [&](const MultiIndex& a) { S.set(a, A.at(a) * B.at(a)); });
    return S;
}

std::complex<double> laurent_transform_value(const PointDistribution& T,
                                             const std::vector<std::complex<double>>& z) {
    if (z.size() != T.dim()) throw DimensionMismatch(z.size(), T.dim());
    std::complex<double> s(0.0, 0.0);
    for (const auto& [k, c] : T.terms()) {
        // d^m_xi (z - xi)^-1 = m! (z - xi)^-(m+1)
        std::complex<double> v(c.to_double(), 0.0);
        if (k.mu.order() % 2 == 1) v = -v;
        for (std::size_t j = 0; j < T.dim(); ++j) {
            const std::complex<double> den = z[j] - k.point[j].to_double();
            if (std::abs(den) < 1e-14 * (1.0 + std::abs(z[j])))
                throw NumericError("evaluation point is on (or too close to) a pole");
            v *= factorial(k.mu[j]).to_double();
            std::complex<double> dp(1.0, 0.0);
            for (unsigned i = 0; i <= k.mu[j]; ++i) dp *= den;
            v /= dp;
        }
        s += v;
    }
    return s;
}

SeriesTable laurent_coefficients_at_infinity(const PointDistribution& T,
                                             const std::vector<std::uint32_t>& max_degree) {
    SeriesTable S(T.dim(), max_degree);
    for_each_leq(max_degree, [&](const MultiIndex& alpha) {
        Rational s(0);
        for (const auto& [k, c] : T.terms()) {
            // m! (z-a)^-(m+1) = sum_{i>=0} m! C(m+i, m) a^i z^-(m+1+i); the
            // z^-(alpha+1) coefficient needs i = alpha - m >= 0
            Rational v = c;
            if (k.mu.order() % 2 == 1) v = -v;
            bool zero = false;
            for (std::size_t j = 0; j < T.dim(); ++j) {
                if (alpha[j] < k.mu[j]) { zero = true; break; }
                const unsigned i = alpha[j] - k.mu[j];
                v *= factorial(k.mu[j]) * binomial(k.mu[j] + i, k.mu[j]);
                v *= k.point[j].pow(static_cast<long>(i));
            }
            if (!zero) s += v;
        }
        S.set(alpha, s);
    });
    return S;
}

std::complex<double> char_function(const PointDistribution& T,
                                   const std::vector<std::complex<double>>& z) {
    if (z.size() != T.dim()) throw DimensionMismatch(z.size(), T.dim());
    if (!T.support_positive())
        throw ValidationError("characteristic function requires support in the positive orthant");
    const std::complex<double> minus_i(0.0, -1.0);
    std::complex<double> s(0.0, 0.0);
    for (const auto& [k, c] : T.terms()) {
        std::complex<double> v(c.to_double(), 0.0);
        if (k.mu.order() % 2 == 1) v = -v;
        for (std::size_t j = 0; j < T.dim(); ++j) {
            // d^m_x x^s = ff(s, m) x^(s-m) with s = -i z_j, principal powers
            const std::complex<double> sj = minus_i * z[j];
            const double a = k.point[j].to_double();
            v *= falling_factorial(sj, k.mu[j]);
            v *= std::exp((sj - static_cast<double>(k.mu[j])) * std::log(a));
        }
        s += v;
    }
    return s;
}

} // namespace mconv
