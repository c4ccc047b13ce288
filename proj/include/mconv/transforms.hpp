#pragma once

#include <complex>

#include "mconv/distribution.hpp"

namespace mconv {

// One factor z_j^num_power / (1 - pole_j z_j)^den_power of a transform term.
struct TransformFactor {
    Rational pole;           // support coordinate a_j
    unsigned num_power = 0;  // mu_j
    unsigned den_power = 1;  // mu_j + 1
};

struct TransformTerm {
    Rational coef;
    std::vector<TransformFactor> factors; // one per coordinate
};

// Rational function sum_terms coef * prod_j z_j^m / (1 - a_j z_j)^n, the shape
// taken by T_xi(prod_j 1/(1 - xi_j z_j)) for point-supported T.
class RationalTransform {
public:
    explicit RationalTransform(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::vector<TransformTerm>& terms() const { return terms_; }
    void add_term(TransformTerm t);

    // Evaluate at a complex point; throws NumericError on (near-)pole.
    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;

private:
    std::size_t dim_;
    std::vector<TransformTerm> terms_;
};

// Dense table of exact coefficients indexed by alpha <= max_degree
// componentwise.  Used both for power-series coefficients and moment tables.
class SeriesTable {
public:
    SeriesTable(std::size_t dim, std::vector<std::uint32_t> max_degree);

    std::size_t dim() const { return dim_; }
    const std::vector<std::uint32_t>& max_degree() const { return max_degree_; }
    const Rational& at(const MultiIndex& alpha) const;
    void set(const MultiIndex& alpha, const Rational& v);
    // Visit entries in lexicographic order of alpha.
    void for_each(const std::function<void(const MultiIndex&, const Rational&)>& fn) const;

    friend bool operator==(const SeriesTable& a, const SeriesTable& b) {
        return a.dim_ == b.dim_ && a.max_degree_ == b.max_degree_ && a.data_ == b.data_;
    }

private:
    std::size_t dim_;
    std::vector<std::uint32_t> max_degree_;
    std::vector<Rational> data_;

    std::size_t index(const MultiIndex& alpha) const;
};

// T_xi(prod_j 1/(1 - xi_j z_j)) as an explicit rational function; its Taylor
// coefficient at alpha is the moment T(x^alpha).
RationalTransform cauchy_transform(const PointDistribution& T);

// Exact Taylor coefficients of a transform around 0 up to max_degree.
SeriesTable taylor_coefficients(const RationalTransform& F, const std::vector<std::uint32_t>& max_degree);

// Moment table T(x^alpha), alpha <= max_degree.
SeriesTable moment_table(const PointDistribution& T, const std::vector<std::uint32_t>& max_degree);

// Entrywise product of coefficient tables (the series side of star).
SeriesTable hadamard_product(const SeriesTable& A, const SeriesTable& B);

// T_xi(prod_j 1/(z_j - xi_j)), the variant with expansion at infinity
//   sum_alpha T(x^alpha) / z^(alpha + 1).
std::complex<double> laurent_transform_value(const PointDistribution& T,
                                             const std::vector<std::complex<double>>& z);
// Coefficient of z^-(alpha+1) in that expansion, alpha <= max_degree: equals
// the moment table (checked against the Taylor route in tests).
SeriesTable laurent_coefficients_at_infinity(const PointDistribution& T,
                                             const std::vector<std::uint32_t>& max_degree);

// T_x(x^{-i z}) via principal powers; requires support in the open positive
// orthant.  Entire in z; at z = i alpha it reproduces the moment T(x^alpha).
std::complex<double> char_function(const PointDistribution& T,
                                   const std::vector<std::complex<double>>& z);

} // namespace mconv
