#pragma once

#include "linkforms/pairing.hpp"
#include "linkforms/sigma0.hpp"
#include "linkforms/table.hpp"

namespace linkforms {

/// The complete invariant of the p-part: k -> (rho_k, sigma_k), finitely
/// supported. Signatures come from the closed-form homomorphism values.
inline Table invariant_table(const Pairing& x, long long p) {
    if (p == 2) {
        Table t = Table::two();
        int maxk = max_level(x, 2);
        for (int k = 1; k <= maxk; ++k) t.set(k, rho(x, 2, k), sigma2(x, k));
        return t;
    }
    Table t = Table::odd(p);
    int maxk = max_level(x, p);
    for (int k = 1; k <= maxk; ++k) t.set(k, rho(x, p, k), sign_to_z8(sigma_odd(x, p, k)));
    return t;
}

/// Isomorphism is decided through invariants alone: tables must coincide at
/// every prime.
inline bool is_isomorphic(const Pairing& a, const Pairing& b) {
    std::set<long long> ps;
    for (long long p : primes_of(a)) ps.insert(p);
    for (long long p : primes_of(b)) ps.insert(p);
    for (long long p : ps)
        if (!(invariant_table(a, p) == invariant_table(b, p))) return false;
    return true;
}

/// Sum of the per-generator Gauss arguments over the whole form (gamma is
/// multiplicative over orthogonal sums).
inline int sigma0_sum(const QuadraticForm& q) {
    int s = 0;
    for (const QGen2& g : q.two) s += sigma0(g);
    for (auto& [p, gens] : q.odd)
        for (const GenOdd& g : gens) s += sigma0(g);
    return mod_pos(s, 8);
}

/// Gauss argument of the 2-part alone. The odd part is classified by its
/// pairing, so this is the only refinement invariant a table needs.
inline int sigma0_two(const QuadraticForm& q) {
    int s = 0;
    for (const QGen2& g : q.two) s += sigma0(g);
    return mod_pos(s, 8);
}

/// Quadratic-flavor table of the 2-part: entry 0 holds (0, arg gamma);
/// entries k >= 1 are the invariants of the underlying 2-adic pairing.
inline Table quad_invariant_table(const QuadraticForm& q) {
    Table t = Table::quadratic();
    t.set(0, 0, Z8Bar(sigma0_two(q)));
    Pairing under = underlying_pairing(q);
    int maxk = max_level(under, 2);
    for (int k = 1; k <= maxk; ++k) t.set(k, rho(under, 2, k), sigma2(under, k));
    return t;
}

inline bool is_isomorphic(const QuadraticForm& a, const QuadraticForm& b) {
    if (!(quad_invariant_table(a) == quad_invariant_table(b))) return false;
    Pairing ua = underlying_pairing(a), ub = underlying_pairing(b);
    std::set<long long> ps;
    for (long long p : primes_of(ua)) ps.insert(p);
    for (long long p : primes_of(ub)) ps.insert(p);
    for (long long p : ps) {
        if (p == 2) continue;
        if (!(invariant_table(ua, p) == invariant_table(ub, p))) return false;
    }
    return true;
}

}  // namespace linkforms
