#include "mconv/jet.hpp"

#include <cmath>
#include <limits>

namespace mconv {

namespace {

double falling(double s, unsigned k) {
    double r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (s - static_cast<double>(i));
    return r;
}

} // namespace

JetFunction jet_from_polynomial(const Polynomial& p) {
    JetFunction f;
    f.dim = p.dim();
    f.max_order = std::numeric_limits<unsigned>::max(); // all derivatives exist
    f.eval = [p](const std::vector<double>& x, const MultiIndex& beta) {
        return p.derivative(beta).evaluate(x);
    };
    return f;
}

JetFunction jet_exp() {
    JetFunction f;
    f.dim = 1;
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [](const std::vector<double>& x, const MultiIndex& beta) {
        (void)beta;
        return std::exp(x.at(0));
    };
    return f;
}

JetFunction jet_log() {
    JetFunction f;
    f.dim = 1;
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [](const std::vector<double>& x, const MultiIndex& beta) {
        const double t = x.at(0);
        const unsigned k = beta[0];
        if (k == 0) return std::log(t);
        // d^k log x = (-1)^(k-1) (k-1)! x^-k
        double r = (k % 2 == 0 ? -1.0 : 1.0);
        for (unsigned i = 1; i < k; ++i) r *= i;
        return r * std::pow(t, -static_cast<double>(k));
    };
    return f;
}

JetFunction jet_power(double s) {
    JetFunction f;
    f.dim = 1;
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [s](const std::vector<double>& x, const MultiIndex& beta) {
        const unsigned k = beta[0];
        return falling(s, k) * std::pow(x.at(0), s - static_cast<double>(k));
    };
    return f;
}

JetFunction jet_log_power(unsigned kpow) {
    JetFunction f;
    f.dim = 1;
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [kpow](const std::vector<double>& x, const MultiIndex& beta) {
        // d^m (log x)^k: expand via (log x)^k = g(log x), g(t) = t^k, and
        // Faa di Bruno on x -> log x; easier: recurse on m with exact formula
        // d/dx (log x)^j = j (log x)^(j-1) / x.  Represent the derivative as
        // sum_j c_j (log x)^j / x^m and build coefficients iteratively.
        const unsigned m = beta[0];
        const double t = x.at(0);
        std::vector<double> c(kpow + 1, 0.0);
        c[kpow] = 1.0; // current expression: sum_j c_j (log x)^j / x^(step)
        for (unsigned step = 0; step < m; ++step) {
            std::vector<double> n(kpow + 1, 0.0);
            for (unsigned j = 0; j <= kpow; ++j) {
                if (c[j] == 0.0) continue;
                // d/dx [ (log x)^j / x^step ] = j (log x)^{j-1} / x^{step+1}
                //                               - step (log x)^j / x^{step+1}
                if (j > 0) n[j - 1] += c[j] * j;
                n[j] -= c[j] * static_cast<double>(step);
            }
            c = std::move(n);
        }
        const double L = std::log(t);
        double s = 0, Lj = 1;
        for (unsigned j = 0; j <= kpow; ++j) { s += c[j] * Lj; Lj *= L; }
        return s / std::pow(t, static_cast<double>(m));
    };
    return f;
}

JetFunction jet_exp_linear(std::size_t dim, const std::vector<double>& c) {
    JetFunction f;
    f.dim = dim;
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [c, dim](const std::vector<double>& t, const MultiIndex& beta) {
        double dot = 0, fac = 1;
        for (std::size_t j = 0; j < dim; ++j) {
            dot += c.at(j) * t.at(j);
            fac *= std::pow(c.at(j), static_cast<double>(beta[j]));
        }
        return fac * std::exp(dot);
    };
    return f;
}

JetFunction jet_power_product(const std::vector<double>& s) {
    JetFunction f;
    f.dim = s.size();
    f.max_order = std::numeric_limits<unsigned>::max();
    f.eval = [s](const std::vector<double>& x, const MultiIndex& beta) {
        double r = 1;
        for (std::size_t j = 0; j < s.size(); ++j)
            r *= falling(s[j], beta[j]) * std::pow(x.at(j), s[j] - static_cast<double>(beta[j]));
        return r;
    };
    return f;
}

} // namespace mconv
