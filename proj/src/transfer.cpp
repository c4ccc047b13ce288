#include "mconv/transfer.hpp"

#include <cmath>

#include "mconv/stirling.hpp"

namespace mconv {

AdditivePointDistribution::AdditivePointDistribution(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw ValidationError("dimension must be at least 1");
}

unsigned AdditivePointDistribution::order() const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.mu.order());
    return m;
}

void AdditivePointDistribution::add_term(std::vector<double> point, MultiIndex mu,
                                         const Rational& c, unsigned max_order) {
    if (point.size() != dim_) throw DimensionMismatch(point.size(), dim_);
    if (mu.dim() != dim_) throw DimensionMismatch(mu.dim(), dim_);
    if (mu.order() > max_order) throw OrderCapExceeded(mu.order(), max_order);
    for (double p : point)
        if (!std::isfinite(p)) throw ValidationError("support point must be finite");
    if (c.is_zero()) return;
    AddTermKey key{std::move(point), std::move(mu)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AdditivePointDistribution AdditivePointDistribution::plus(const AdditivePointDistribution& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    AdditivePointDistribution r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.point, k.mu, c);
    return r;
}

AdditivePointDistribution AdditivePointDistribution::scaled(const Rational& c) const {
    AdditivePointDistribution r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

double AdditivePointDistribution::apply(const JetFunction& f) const {
    if (f.dim != dim_) throw DimensionMismatch(f.dim, dim_);
    if (order() > f.max_order)
        throw ValidationError("jet order insufficient for distribution of order " +
                              std::to_string(order()));
    double s = 0;
    for (const auto& [k, c] : terms_) {
        double v = f.eval(k.point, k.mu);
        if (k.mu.order() % 2 == 1) v = -v;
        s += c.to_double() * v;
    }
    return s;
}

AdditivePointDistribution log_pushforward(const PointDistribution& T) {
    if (!T.support_positive())
        throw ValidationError("log pushforward requires support in the positive orthant");
    const std::size_t d = T.dim();
    AdditivePointDistribution out(d);
    for (const auto& [k, c] : T.terms()) {
        std::vector<double> lp(d);
        Rational apow(1); // prod_j a_j^-mu_j, exact
        for (std::size_t j = 0; j < d; ++j) {
            lp[j] = std::log(k.point[j].to_double());
            apow *= k.point[j].pow(-static_cast<long>(k.mu[j]));
        }
        // delta_a^(m) -> sum_{k<=m} (-1)^(|m|+|k|) a^-m prod_j s(m_j,k_j) delta_{log a}^(k)
        for_each_leq(k.mu.entries(), [&](const MultiIndex& kk) {
            Rational w = c * apow;
            for (std::size_t j = 0; j < d; ++j) w *= stirling1_signed(k.mu[j], kk[j]);
            if ((k.mu.order() + kk.order()) % 2 == 1) w = -w;
            out.add_term(lp, kk, w);
        });
    }
    return out;
}

PointDistribution exp_pushforward(const AdditivePointDistribution& A) {
    const std::size_t d = A.dim();
    std::vector<PointDistribution::Term> terms;
    for (const auto& [k, c] : A.terms()) {
        std::vector<Rational> point(d);
        for (std::size_t j = 0; j < d; ++j)
            point[j] = Rational::from_double(std::exp(k.point[j]));
        // delta_s^(k) -> sum_{j<=k} (-1)^(|k|+|j|) prod S(k_i,j_i) a^j delta_a^(j)
        for_each_leq(k.mu.entries(), [&](const MultiIndex& jj) {
            Rational w = c;
            for (std::size_t i = 0; i < d; ++i) {
                w *= stirling2(k.mu[i], jj[i]);
                w *= point[i].pow(static_cast<long>(jj[i]));
            }
            if ((k.mu.order() + jj.order()) % 2 == 1) w = -w;
            terms.push_back({point, jj, w});
        });
    }
    return PointDistribution::make(d, terms);
}

AdditivePointDistribution classical_convolution(const AdditivePointDistribution& A,
                                                const AdditivePointDistribution& B,
                                                unsigned max_order) {
    if (A.dim() != B.dim()) throw DimensionMismatch(A.dim(), B.dim());
    AdditivePointDistribution r(A.dim());
    for (const auto& [ak, ac] : A.terms()) {
        for (const auto& [bk, bc] : B.terms()) {
            std::vector<double> p(A.dim());
            for (std::size_t j = 0; j < A.dim(); ++j) p[j] = ak.point[j] + bk.point[j];
            r.add_term(p, ak.mu.plus(bk.mu), ac * bc, max_order);
        }
    }
    return r;
}

} // namespace mconv
