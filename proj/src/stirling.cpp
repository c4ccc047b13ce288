#include "mconv/stirling.hpp"

#include <vector>

namespace mconv {

namespace {

struct Tables {
    // triangle[n][k], 0 <= k <= n <= kStirlingTableSize
    std::vector<std::vector<mpz_class>> s2, s1;

    Tables() {
        const unsigned N = kStirlingTableSize;
        s2.resize(N + 1);
        s1.resize(N + 1);
        for (unsigned n = 0; n <= N; ++n) {
            s2[n].assign(n + 1, 0);
            s1[n].assign(n + 1, 0);
        }
        s2[0][0] = 1;
        s1[0][0] = 1;
        for (unsigned n = 1; n <= N; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                // S(n,k) = k S(n-1,k) + S(n-1,k-1)
                s2[n][k] = s2[n - 1][k - 1];
                if (k <= n - 1) s2[n][k] += k * s2[n - 1][k];
                // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)   (signed)
                s1[n][k] = s1[n - 1][k - 1];
                if (k <= n - 1) s1[n][k] -= (n - 1) * s1[n - 1][k];
            }
        }
    }
};

const Tables& tables() {
    static const Tables t; // built once, read-only afterwards
    return t;
}

} // namespace

Rational stirling2(unsigned n, unsigned k) {
    if (n > kStirlingTableSize)
        throw ValidationError("Stirling table exceeded: n = " + std::to_string(n));
    if (k > n) return Rational(0);
    return Rational(mpq_class(tables().s2[n][k]));
}

Rational stirling1_signed(unsigned n, unsigned k) {
    if (n > kStirlingTableSize)
        throw ValidationError("Stirling table exceeded: n = " + std::to_string(n));
    if (k > n) return Rational(0);
    return Rational(mpq_class(tables().s1[n][k]));
}

} // namespace mconv
