#include "mconv/euler.hpp"

#include "mconv/stirling.hpp"

namespace mconv {

EulerOperator::EulerOperator(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw ValidationError("dimension must be at least 1");
}

void EulerOperator::add_term(const MultiIndex& alpha, const Rational& c) {
    if (alpha.dim() != dim_) throw DimensionMismatch(alpha.dim(), dim_);
    if (c.is_zero()) return;
    auto it = c_.find(alpha);
    if (it == c_.end()) {
        c_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

EulerOperator EulerOperator::make(std::size_t dim,
                                  const std::vector<std::pair<MultiIndex, Rational>>& theta_terms) {
    EulerOperator p(dim);
    for (const auto& [a, c] : theta_terms) p.add_term(a, c);
    return p;
}

EulerOperator EulerOperator::theta(std::size_t dim, std::size_t j) {
    EulerOperator p(dim);
    p.add_term(MultiIndex::unit(dim, j), Rational(1));
    return p;
}

EulerOperator EulerOperator::constant(std::size_t dim, const Rational& c) {
    EulerOperator p(dim);
    p.add_term(MultiIndex(dim), c);
    return p;
}

unsigned EulerOperator::degree() const {
    unsigned d = 0;
    for (const auto& [a, c] : c_) d = std::max(d, a.order());
    return d;
}

EulerOperator EulerOperator::plus(const EulerOperator& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    EulerOperator r = *this;
    for (const auto& [a, c] : o.c_) r.add_term(a, c);
    return r;
}

EulerOperator EulerOperator::times(const EulerOperator& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    EulerOperator r(dim_);
    // theta_j commute, so this is plain polynomial multiplication in theta
    for (const auto& [a, ca] : c_)
        for (const auto& [b, cb] : o.c_)
            r.add_term(a.plus(b), ca * cb);
    return r;
}

EulerOperator EulerOperator::scaled(const Rational& c) const {
    EulerOperator r(dim_);
    for (const auto& [a, ca] : c_) r.add_term(a, ca * c);
    return r;
}

std::map<MultiIndex, Rational> EulerOperator::to_xd_form() const {
    // theta_j^n = sum_k S(n,k) x_j^k d_j^k, coordinatewise and independent
    std::map<MultiIndex, Rational> b;
    for (const auto& [alpha, c] : c_) {
        std::vector<std::uint32_t> bound(alpha.entries());
        for_each_leq(bound, [&](const MultiIndex& beta) {
            Rational w = c;
            for (std::size_t j = 0; j < dim_; ++j) w *= stirling2(alpha[j], beta[j]);
            if (w.is_zero()) return;
            auto it = b.find(beta);
            if (it == b.end()) b.emplace(beta, w);
            else {
                it->second += w;
                if (it->second.is_zero()) b.erase(it);
            }
        });
    }
    return b;
}

PointDistribution EulerOperator::to_distribution() const {
    // x^b d^b f = (-1)^|b| delta_1^(b)_y f(x o y), so P(theta) acts as the
    // distribution sum_b b_coef (-1)^|b| delta_1^(b)
    PointDistribution t(dim_);
    const std::vector<Rational> ones(dim_, Rational(1));
    for (const auto& [beta, w] : to_xd_form()) {
        Rational c = (beta.order() % 2 == 1) ? -w : w;
        t.add_term(ones, beta, c, kDefaultMaxOrder);
    }
    return t;
}

EulerOperator EulerOperator::from_distribution(const PointDistribution& T) {
    const std::vector<Rational> ones(T.dim(), Rational(1));
    for (const auto& [k, c] : T.terms())
        if (k.point != ones)
            throw ValidationError("distribution is not supported at the unit point");
    // invert to_distribution: b_beta = (-1)^|beta| t_beta, then
    // x^m d^m = sum_n s(m,n) theta^n coordinatewise
    EulerOperator p(T.dim());
    for (const auto& [k, t] : T.terms()) {
        Rational b = (k.mu.order() % 2 == 1) ? -t : t;
        std::vector<std::uint32_t> bound(k.mu.entries());
        for_each_leq(bound, [&](const MultiIndex& alpha) {
            Rational w = b;
            for (std::size_t j = 0; j < T.dim(); ++j) w *= stirling1_signed(k.mu[j], alpha[j]);
            p.add_term(alpha, w);
        });
    }
    return p;
}

Polynomial EulerOperator::apply(const Polynomial& p) const {
    if (dim_ != p.dim()) throw DimensionMismatch(dim_, p.dim());
    Polynomial r(dim_);
    for (const auto& [gamma, pc] : p.coeffs()) {
        // monomials are eigenvectors: theta^alpha x^gamma = gamma^alpha x^gamma
        std::vector<Rational> g(dim_);
        for (std::size_t j = 0; j < dim_; ++j) g[j] = Rational(static_cast<long>(gamma[j]));
        r.add_term(gamma, pc * symbol(g));
    }
    return r;
}

double EulerOperator::apply_pointwise(const JetFunction& f, const std::vector<double>& x) const {
    if (dim_ != f.dim) throw DimensionMismatch(dim_, f.dim);
    if (degree() > f.max_order)
        throw ValidationError("jet order insufficient for operator of degree " +
                              std::to_string(degree()));
    double s = 0;
    for (const auto& [beta, w] : to_xd_form()) {
        double xb = 1;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::uint32_t i = 0; i < beta[j]; ++i) xb *= x.at(j);
        s += w.to_double() * xb * f.eval(x, beta);
    }
    return s;
}

std::complex<double> EulerOperator::symbol(const std::vector<std::complex<double>>& z) const {
    if (z.size() != dim_) throw DimensionMismatch(z.size(), dim_);
    std::complex<double> s(0.0, 0.0);
    for (const auto& [alpha, c] : c_) {
        std::complex<double> t(c.to_double(), 0.0);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::uint32_t i = 0; i < alpha[j]; ++i) t *= z[j];
        s += t;
    }
    return s;
}

Rational EulerOperator::symbol(const std::vector<Rational>& z) const {
    if (z.size() != dim_) throw DimensionMismatch(z.size(), dim_);
    Rational s(0);
    for (const auto& [alpha, c] : c_) {
        Rational t = c;
        for (std::size_t j = 0; j < dim_; ++j)
            t *= z[j].pow(static_cast<long>(alpha[j]));
        s += t;
    }
    return s;
}

PointDistribution EulerOperator::transpose_apply(const PointDistribution& T,
                                                 unsigned max_order) const {
    if (dim_ != T.dim()) throw DimensionMismatch(dim_, T.dim());
    PointDistribution r(dim_);
    for (const auto& [alpha, c] : c_) {
        // (theta^alpha)' = prod_j (theta_j')^alpha_j with theta_j' S = -d_j(x_j S)
        PointDistribution cur = T;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::uint32_t i = 0; i < alpha[j]; ++i)
                cur = cur.times_coordinate(j).derivative(j, max_order).scaled(Rational(-1));
        r = r.plus(cur.scaled(c));
    }
    return r;
}

} // namespace mconv
