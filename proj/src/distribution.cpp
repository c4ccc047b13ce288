#include "mconv/distribution.hpp"

#include <algorithm>

namespace mconv {

PointDistribution::PointDistribution(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw ValidationError("dimension must be at least 1");
}

void PointDistribution::add_term(std::vector<Rational> point, MultiIndex mu,
                                 const Rational& c, unsigned max_order) {
    if (point.size() != dim_) throw DimensionMismatch(point.size(), dim_);
    if (mu.dim() != dim_) throw DimensionMismatch(mu.dim(), dim_);
    if (mu.order() > max_order) throw OrderCapExceeded(mu.order(), max_order);
    if (c.is_zero()) return;
    DistTermKey key{std::move(point), std::move(mu)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PointDistribution PointDistribution::make(std::size_t dim, const std::vector<Term>& terms,
                                          unsigned max_order) {
    PointDistribution t(dim);
    for (const auto& tm : terms) t.add_term(tm.point, tm.mu, tm.coef, max_order);
    return t;
}

PointDistribution PointDistribution::delta(const std::vector<Rational>& point) {
    PointDistribution t(point.size());
    t.add_term(point, MultiIndex(point.size()), Rational(1), kDefaultMaxOrder);
    return t;
}

PointDistribution PointDistribution::delta_derivative(const std::vector<Rational>& point,
                                                      const MultiIndex& mu, const Rational& coef,
                                                      unsigned max_order) {
    PointDistribution t(point.size());
    t.add_term(point, mu, coef, max_order);
    return t;
}

unsigned PointDistribution::order() const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.mu.order());
    return m;
}

std::vector<std::vector<Rational>> PointDistribution::support() const {
    std::vector<std::vector<Rational>> pts;
    for (const auto& [k, c] : terms_)
        if (pts.empty() || pts.back() != k.point) pts.push_back(k.point);
    // terms_ is ordered by (point, mu), so duplicates are adjacent
    return pts;
}

bool PointDistribution::support_positive() const {
    for (const auto& [k, c] : terms_)
        for (const auto& p : k.point)
            if (p.sign() <= 0) return false;
    return true;
}

Rational PointDistribution::apply(const Polynomial& p) const {
    if (p.dim() != dim_) throw DimensionMismatch(p.dim(), dim_);
    Rational s(0);
    for (const auto& [k, c] : terms_) {
        Rational v = p.derivative(k.mu).evaluate(k.point);
        if (k.mu.order() % 2 == 1) v = -v;
        s += c * v;
    }
    return s;
}

double PointDistribution::apply(const JetFunction& f) const {
    if (f.dim != dim_) throw DimensionMismatch(f.dim, dim_);
    if (order() > f.max_order)
        throw ValidationError("jet order " + std::to_string(f.max_order) +
                              " insufficient for distribution of order " + std::to_string(order()));
    double s = 0;
    for (const auto& [k, c] : terms_) {
        double v = f.eval(to_doubles(k.point), k.mu);
        if (k.mu.order() % 2 == 1) v = -v;
        s += c.to_double() * v;
    }
    return s;
}

Rational PointDistribution::moment(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_) throw DimensionMismatch(alpha.dim(), dim_);
    Rational s(0);
    for (const auto& [k, c] : terms_) {
        // delta^(mu)_a(x^alpha) = (-1)^|mu| * prod_j ff(alpha_j, mu_j) a_j^(alpha_j - mu_j),
        // and d^mu x^alpha = 0 unless mu <= alpha componentwise
        if (!k.mu.leq(alpha)) continue;
        Rational v = c;
        for (std::size_t j = 0; j < dim_; ++j) {
            v *= falling_factorial(static_cast<long>(alpha[j]), k.mu[j]);
            v *= k.point[j].pow(static_cast<long>(alpha[j]) - static_cast<long>(k.mu[j]));
        }
        if (k.mu.order() % 2 == 1) v = -v;
        s += v;
    }
    return s;
}

PointDistribution PointDistribution::plus(const PointDistribution& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    PointDistribution r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.point, k.mu, c, kDefaultMaxOrder);
    return r;
}

PointDistribution PointDistribution::scaled(const Rational& c) const {
    PointDistribution r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

PointDistribution PointDistribution::times_coordinate(std::size_t j) const {
    if (j >= dim_) throw ValidationError("coordinate index out of range");
    PointDistribution r(dim_);
    for (const auto& [k, c] : terms_) {
        r.add_term(k.point, k.mu, c * k.point[j], kDefaultMaxOrder);
        if (k.mu[j] > 0) {
            MultiIndex m = k.mu;
            m[j] -= 1;
            r.add_term(k.point, m, -(c * Rational(static_cast<long>(k.mu[j]))), kDefaultMaxOrder);
        }
    }
    return r;
}

PointDistribution PointDistribution::derivative(std::size_t j, unsigned max_order) const {
    if (j >= dim_) throw ValidationError("coordinate index out of range");
    PointDistribution r(dim_);
    for (const auto& [k, c] : terms_) {
        MultiIndex m = k.mu;
        m[j] += 1;
        r.add_term(k.point, m, c, max_order);
    }
    return r;
}

} // namespace mconv
