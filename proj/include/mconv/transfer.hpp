#pragma once

#include "mconv/distribution.hpp"

namespace mconv {

// Term key for distributions supported at floating-point points (images of
// exact points under coordinatewise log).  Coefficients stay exact.
struct AddTermKey {
    std::vector<double> point;
    MultiIndex mu;

    friend bool operator==(const AddTermKey& a, const AddTermKey& b) {
        return a.point == b.point && a.mu == b.mu;
    }
    friend std::partial_ordering operator<=>(const AddTermKey& a, const AddTermKey& b) {
        if (auto c = a.point <=> b.point; c != 0) return c;
        return std::partial_ordering(a.mu <=> b.mu);
    }
};

// Point-supported distribution on the additive side (support points are
// doubles, coefficients exact rationals).
class AdditivePointDistribution {
public:
    explicit AdditivePointDistribution(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<AddTermKey, Rational>& terms() const { return terms_; }
    unsigned order() const;

    void add_term(std::vector<double> point, MultiIndex mu, const Rational& c,
                  unsigned max_order = kDefaultMaxOrder);
    AdditivePointDistribution plus(const AdditivePointDistribution& o) const;
    AdditivePointDistribution scaled(const Rational& c) const;

    // Pairing with a jet on the additive side.
    double apply(const JetFunction& f) const;

    friend bool operator==(const AdditivePointDistribution& a, const AdditivePointDistribution& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    std::map<AddTermKey, Rational> terms_;
};

// Pushforward under coordinatewise log; requires support in the open positive
// orthant.  delta_a^(m) maps, per coordinate, to
//   sum_k (-1)^(m+k) a^-m s(m,k) delta_{log a}^(k)
// with s the signed Stirling numbers of the first kind.
AdditivePointDistribution log_pushforward(const PointDistribution& T);

// Pushforward under coordinatewise exp; support points become exact rationals
// (the double value of exp is kept bit-exactly).  Per coordinate,
//   delta_s^(k) maps to sum_j (-1)^(k+j) S(k,j) e^(js) ... collected as
//   sum_j (-1)^(k+j) S(k,j) a^j delta_a^(j) with a = exp(s).
PointDistribution exp_pushforward(const AdditivePointDistribution& A);

// Additive convolution of point-supported distributions: supports add,
// derivative orders add, coefficients multiply.
AdditivePointDistribution classical_convolution(const AdditivePointDistribution& A,
                                                const AdditivePointDistribution& B,
                                                unsigned max_order = kDefaultMaxOrder);

} // namespace mconv
