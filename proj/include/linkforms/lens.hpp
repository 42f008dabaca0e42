#pragma once

#include "linkforms/summands.hpp"

namespace linkforms {

/// The lens space L(n,q), n >= 2, gcd(n,q) = 1. Its linking pairing is
/// cyclic on Z/n with self-linking q/n; orientation reversal corresponds to
/// negating q at the call site.
struct LensSpace {
    long long n = 2;
    long long q = 1;
};

inline void validate(const LensSpace& L) {
    if (L.n < 2) throw precondition_error("lens space order must be >= 2");
    if (std::gcd(L.n, mod_pos(L.q, L.n)) != 1)
        throw precondition_error("lens space parameters must be coprime");
}

/// Cyclic pairing q/n on Z/n, decomposed per prime through the CRT: the
/// p-component generator is (n/p^k) * 1 with self-linking q (n/p^k) / p^k.
inline Pairing lens_pairing(const LensSpace& L) {
    validate(L);
    Pairing x;
    long long rest = L.n;
    for (long long p = 2; rest > 1; ++p) {
        if (p * p > rest) p = rest;
        if (rest % p != 0) continue;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        long long pk = ipow(p, k);
        long long a = mulmod(mod_pos(L.q, pk), mod_pos(L.n / pk, pk), pk);
        if (p == 2)
            x.two.push_back(cyclic2(k, a));
        else
            x.odd[p].push_back(odd_gen(p, k, a));
    }
    canonicalize(x);
    return x;
}

inline Pairing connected_sum(const std::vector<LensSpace>& factors) {
    Pairing x;
    for (const LensSpace& L : factors) x = oplus(x, lens_pairing(L));
    return x;
}

/// A degree-one map onto the lens space exists iff its pairing is an
/// orthogonal summand of the source pairing; the witness is the complement.
inline std::optional<Pairing> degree_one_onto_lens(const Pairing& source, const LensSpace& target,
                                                   const Limits& lim = default_limits()) {
    return orthogonal_summand(lens_pairing(target), source, lim);
}

/// Degree-one maps onto every lens space with fundamental group Z/n,
/// n = p^k: a direct summand check per residue class of q (the pairing
/// class of L(p^k, q) depends only on q mod 2^min(k,3) for p = 2, and on
/// the quadratic class of q for p odd).
inline bool onto_all_lens(const Pairing& source, long long n,
                          const Limits& lim = default_limits()) {
    if (n < 2) throw precondition_error("onto_all_lens: n must be >= 2");
    long long p = 2;
    while (n % p != 0) p = p == 2 ? 3 : p + 2;
    long long m = n;
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) throw precondition_error("onto_all_lens: n must be a prime power");

    std::vector<long long> classes;
    if (p == 2) {
        long long span = ipow(2, std::min(k, 3));
        for (long long q = 1; q < span; q += 2) classes.push_back(q);
    } else {
        classes = {1, least_nonresidue(p)};
    }
    for (long long q : classes)
        if (!degree_one_onto_lens(source, LensSpace{n, q}, lim)) return false;
    return true;
}

/// Spin-preserving degree-one map query: the target's quadratic form must
/// be an orthogonal summand of the source's. The target is required to
/// have cyclic underlying pairing (the lens-space homotopy-type hypothesis).
inline std::optional<QuadraticForm> spin_degree_one(const QuadraticForm& source,
                                                    const QuadraticForm& target,
                                                    const Limits& lim = default_limits()) {
    Pairing u = underlying_pairing(target);
    bool cyclic = true;
    if (u.two.size() > 1 || (u.two.size() == 1 && u.two[0].kind != Gen2Kind::Cyclic))
        cyclic = false;
    for (auto& [p, gens] : u.odd)
        if (gens.size() > 1) cyclic = false;
    if (!cyclic)
        throw precondition_error(
            "spin_degree_one: target must have cyclic underlying pairing "
            "(lens-space homotopy type)");
    return quadratic_summand(target, source, lim);
}

}  // namespace linkforms
