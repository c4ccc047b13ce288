#pragma once

#include <random>

#include "mconv/distribution.hpp"
#include "mconv/euler.hpp"

namespace mconv::testing {

// Deterministic corpus generators.  All tests seed their own mt19937 so runs
// are reproducible and independent of test order.

inline Rational rand_rational(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    long p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p) / Rational(den(rng));
}

inline Rational rand_positive_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 5);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng)) / Rational(den(rng));
}

inline std::vector<Rational> rand_point(std::mt19937& rng, std::size_t dim, bool positive) {
    std::vector<Rational> p;
    p.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j)
        p.push_back(positive ? rand_positive_rational(rng) : rand_rational(rng, true));
    return p;
}

inline MultiIndex rand_multi_index(std::mt19937& rng, std::size_t dim, unsigned max_order) {
    MultiIndex mu(dim);
    std::uniform_int_distribution<unsigned> pick(0, max_order);
    unsigned budget = pick(rng);
    std::uniform_int_distribution<std::size_t> coord(0, dim - 1);
    for (unsigned i = 0; i < budget; ++i) mu[coord(rng)] += 1;
    return mu;
}

inline PointDistribution rand_distribution(std::mt19937& rng, std::size_t dim, int max_terms,
                                           unsigned max_order, bool positive_support) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::vector<PointDistribution::Term> terms;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        terms.push_back({rand_point(rng, dim, positive_support),
                         rand_multi_index(rng, dim, max_order), rand_rational(rng, true)});
    return PointDistribution::make(dim, terms);
}

inline EulerOperator rand_euler(std::mt19937& rng, std::size_t dim, unsigned degree,
                                bool nonzero = true) {
    std::vector<std::pair<MultiIndex, Rational>> terms;
    std::uniform_int_distribution<int> nterms(1, 4);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(rand_multi_index(rng, dim, degree), rand_rational(rng, true));
    auto P = EulerOperator::make(dim, terms);
    if (nonzero && P.is_zero()) return EulerOperator::constant(dim, Rational(1));
    return P;
}

} // namespace mconv::testing
