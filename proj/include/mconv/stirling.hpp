#pragma once

#include "mconv/rational.hpp"

namespace mconv {

// Largest n for which Stirling numbers are tabulated; generous multiple of the
// default derivative-order cap.
inline constexpr unsigned kStirlingTableSize = 80;

// Stirling number of the second kind S(n, k): theta^n = sum_k S(n,k) x^k d^k.
Rational stirling2(unsigned n, unsigned k);
// Signed Stirling number of the first kind s(n, k): x^n d^n = sum_k s(n,k) theta^k.
Rational stirling1_signed(unsigned n, unsigned k);

} // namespace mconv
