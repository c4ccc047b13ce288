#pragma once

#include <map>
#include <tuple>

#include "mconv/jet.hpp"
#include "mconv/polynomial.hpp"

namespace mconv {

// Default cap on total derivative order of any single term.  Constructions
// that would exceed it throw OrderCapExceeded rather than silently blowing up.
inline constexpr unsigned kDefaultMaxOrder = 32;

// Key of one term: base point (exact coordinates) and derivative multi-index.
struct DistTermKey {
    std::vector<Rational> point;
    MultiIndex mu;

    friend bool operator==(const DistTermKey& a, const DistTermKey& b) {
        return a.point == b.point && a.mu == b.mu;
    }
    friend std::strong_ordering operator<=>(const DistTermKey& a, const DistTermKey& b) {
        if (auto c = a.point <=> b.point; c != 0) return c;
        return a.mu <=> b.mu;
    }
};

// Finite linear combination of derivatives of point masses,
//   T = sum_k c_k * delta^(mu_k)_{a_k},
// where delta^(mu)_a(f) = (-1)^|mu| (d^mu f)(a).  Terms are canonicalized on
// construction: like keys merged, zero coefficients dropped, keys ordered.
class PointDistribution {
public:
    explicit PointDistribution(std::size_t dim);

    struct Term {
        std::vector<Rational> point;
        MultiIndex mu;
        Rational coef;
    };
    static PointDistribution make(std::size_t dim, const std::vector<Term>& terms,
                                  unsigned max_order = kDefaultMaxOrder);
    // Unit point mass delta_a.
    static PointDistribution delta(const std::vector<Rational>& point);
    // c * delta^(mu)_a.
    static PointDistribution delta_derivative(const std::vector<Rational>& point,
                                              const MultiIndex& mu,
                                              const Rational& coef = Rational(1),
                                              unsigned max_order = kDefaultMaxOrder);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<DistTermKey, Rational>& terms() const { return terms_; }
    // Max |mu| over terms; 0 for the zero distribution.
    unsigned order() const;
    // Distinct support points, sorted.
    std::vector<std::vector<Rational>> support() const;
    // True if every support coordinate is > 0.
    bool support_positive() const;

    // Exact pairing with a polynomial.
    Rational apply(const Polynomial& p) const;
    // Pairing with a jet; requires f.max_order >= order().
    double apply(const JetFunction& f) const;
    // T(x^alpha).
    Rational moment(const MultiIndex& alpha) const;

    PointDistribution plus(const PointDistribution& o) const;
    PointDistribution scaled(const Rational& c) const;

    // Multiply by the coordinate function x_j:
    //   x_j delta^(mu)_a = a_j delta^(mu)_a - mu_j delta^(mu - e_j)_a.
    PointDistribution times_coordinate(std::size_t j) const;
    // Distributional partial derivative d_j.
    PointDistribution derivative(std::size_t j, unsigned max_order = kDefaultMaxOrder) const;

    friend bool operator==(const PointDistribution& a, const PointDistribution& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    std::map<DistTermKey, Rational> terms_;

    void add_term(std::vector<Rational> point, MultiIndex mu, const Rational& c, unsigned max_order);
    friend PointDistribution star(const PointDistribution&, const PointDistribution&, unsigned);
    friend class EulerOperator;
};

} // namespace mconv
