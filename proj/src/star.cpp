#include "mconv/star.hpp"

namespace mconv {

PointDistribution star(const PointDistribution& T, const PointDistribution& S,
                       unsigned max_order) {
    if (T.dim() != S.dim()) throw DimensionMismatch(T.dim(), S.dim());
    const std::size_t d = T.dim();
    PointDistribution r(d);

    // For a pair of terms t delta^(mu)_a, s delta^(nu)_b the product expands by
    // Leibniz in each coordinate:
    //   contribution at a o b, index mu + nu - k for every k <= min(mu, nu):
    //   t s (-1)^|k| prod_j C(mu_j,k_j) ff(nu_j,k_j) a_j^(nu_j-k_j) b_j^(mu_j-k_j).
    for (const auto& [tk, tc] : T.terms()) {
        for (const auto& [sk, sc] : S.terms()) {
            std::vector<Rational> point(d);
            for (std::size_t j = 0; j < d; ++j) point[j] = tk.point[j] * sk.point[j];

            std::vector<std::uint32_t> kmax(d);
            for (std::size_t j = 0; j < d; ++j) kmax[j] = std::min(tk.mu[j], sk.mu[j]);

            for_each_leq(kmax, [&](const MultiIndex& k) {
                Rational w = tc * sc;
                for (std::size_t j = 0; j < d; ++j) {
                    w *= binomial(tk.mu[j], k[j]);
                    w *= falling_factorial(static_cast<long>(sk.mu[j]), k[j]);
                    w *= tk.point[j].pow(static_cast<long>(sk.mu[j]) - static_cast<long>(k[j]));
                    w *= sk.point[j].pow(static_cast<long>(tk.mu[j]) - static_cast<long>(k[j]));
                }
                if (k.order() % 2 == 1) w = -w;
                r.add_term(point, tk.mu.plus(sk.mu).minus(k), w, max_order);
            });
        }
    }
    return r;
}

PointDistribution star_unit(std::size_t dim) {
    return PointDistribution::delta(std::vector<Rational>(dim, Rational(1)));
}

Polynomial hadamard_apply(const PointDistribution& T, const Polynomial& p) {
    if (T.dim() != p.dim()) throw DimensionMismatch(T.dim(), p.dim());
    Polynomial r(p.dim());
    for (const auto& [alpha, c] : p.coeffs())
        r.add_term(alpha, c * T.moment(alpha));
    return r;
}

double hadamard_apply_pointwise(const PointDistribution& T, const JetFunction& f,
                                const std::vector<double>& x) {
    if (T.dim() != f.dim) throw DimensionMismatch(T.dim(), f.dim);
    if (x.size() != T.dim()) throw DimensionMismatch(x.size(), T.dim());
    if (T.order() > f.max_order)
        throw ValidationError("jet order insufficient for operator of order " +
                              std::to_string(T.order()));
    double s = 0;
    for (const auto& [k, c] : T.terms()) {
        std::vector<double> arg(x.size());
        double xmu = 1;
        for (std::size_t j = 0; j < x.size(); ++j) {
            arg[j] = x[j] * k.point[j].to_double();
            for (std::uint32_t i = 0; i < k.mu[j]; ++i) xmu *= x[j];
        }
        double v = c.to_double() * xmu * f.eval(arg, k.mu);
        if (k.mu.order() % 2 == 1) v = -v;
        s += v;
    }
    return s;
}

} // namespace mconv
