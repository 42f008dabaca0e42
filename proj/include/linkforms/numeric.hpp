#pragma once

#include <cstdint>
#include <numeric>

#include "linkforms/common.hpp"

namespace linkforms {

inline long long mod_pos(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

inline long long powmod(long long base, long long exp, long long m) {
    long long r = 1 % m;
    base = mod_pos(base, m);
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Legendre symbol (a|p) for odd prime p; a must be a unit mod p.
inline int legendre(long long a, long long p) {
    a = mod_pos(a, p);
    if (a == 0) throw invalid_generator("residue is not a unit mod " + std::to_string(p));
    long long r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

/// Least positive quadratic nonresidue mod an odd prime.
inline long long least_nonresidue(long long p) {
    for (long long a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return a;
    throw unreachable_state("no quadratic nonresidue mod " + std::to_string(p));
}

inline int valuation(long long n, long long p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline long long inverse_mod(long long a, long long m) {
    long long g = std::gcd(mod_pos(a, m), m);
    if (g != 1) throw error("element not invertible mod " + std::to_string(m));
    // extended Euclid
    long long r0 = m, r1 = mod_pos(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return mod_pos(s0, m);
}

}  // namespace linkforms
