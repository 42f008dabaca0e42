#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "linkforms/generators.hpp"

namespace linkforms {

/// A linking pairing presented as a formal orthogonal sum of generator
/// symbols, grouped per prime. The empty sum is the trivial pairing.
struct Pairing {
    std::vector<Gen2> two;                            // sorted
    std::map<long long, std::vector<GenOdd>> odd;     // per odd prime, sorted

    friend bool operator==(const Pairing&, const Pairing&) = default;
};

inline void canonicalize(Pairing& x) {
    std::sort(x.two.begin(), x.two.end());
    for (auto it = x.odd.begin(); it != x.odd.end();) {
        if (it->second.empty()) {
            it = x.odd.erase(it);
        } else {
            std::sort(it->second.begin(), it->second.end());
            ++it;
        }
    }
}

inline Pairing make_pairing(std::vector<Gen2> two, std::vector<GenOdd> odd = {}) {
    Pairing x;
    for (auto& g : two) x.two.push_back(normalize(g));
    for (auto& g : odd) x.odd[g.p].push_back(g);
    canonicalize(x);
    return x;
}

/// Orthogonal sum: multiset union per prime.
inline Pairing oplus(const Pairing& a, const Pairing& b) {
    Pairing r = a;
    r.two.insert(r.two.end(), b.two.begin(), b.two.end());
    for (auto& [p, gens] : b.odd) {
        auto& dst = r.odd[p];
        dst.insert(dst.end(), gens.begin(), gens.end());
    }
    canonicalize(r);
    return r;
}

inline Pairing operator+(const Pairing& a, const Pairing& b) { return oplus(a, b); }

inline std::vector<long long> primes_of(const Pairing& x) {
    std::vector<long long> ps;
    if (!x.two.empty()) ps.push_back(2);
    for (auto& [p, gens] : x.odd)
        if (!gens.empty()) ps.push_back(p);
    return ps;
}

/// Rank of the level-k homogeneous piece of the p-part.
inline long long rho(const Pairing& x, long long p, int k) {
    long long r = 0;
    if (p == 2) {
        for (auto& g : x.two)
            if (g.level == k) r += rank_of(g);
    } else if (auto it = x.odd.find(p); it != x.odd.end()) {
        for (auto& g : it->second)
            if (g.level == k) r += 1;
    }
    return r;
}

inline int max_level(const Pairing& x, long long p) {
    int m = 0;
    if (p == 2) {
        for (auto& g : x.two) m = std::max(m, g.level);
    } else if (auto it = x.odd.find(p); it != x.odd.end()) {
        for (auto& g : it->second) m = std::max(m, g.level);
    }
    return m;
}

/// Per-generator value of the level-k Gauss signature (closed form):
///   sigma_k(A^l(m)) = (-1)^((m-1)/2) for l-k odd > 0, m for l-k even > 0,
///                     inf for l = k, 0 for l < k
///   sigma_k(E0^l)   = 0
///   sigma_k(E1^l)   = 4 for l-k odd > 0, 0 otherwise
inline Z8Bar sigma2_contribution(const Gen2& g, int k) {
    int d = g.level - k;
    switch (g.kind) {
        case Gen2Kind::Cyclic:
            if (d < 0) return Z8Bar(0);
            if (d == 0) return Z8Bar::inf();
            if (d % 2 == 1) return Z8Bar(mod_pos((g.residue - 1) / 2, 2) == 0 ? 1 : -1);
            return Z8Bar(g.residue);
        case Gen2Kind::E0:
            return Z8Bar(0);
        case Gen2Kind::E1:
            return Z8Bar(d > 0 && d % 2 == 1 ? 4 : 0);
    }
    return Z8Bar(0);
}

/// Level-k signature of the 2-part; a monoid homomorphism into Z8Bar.
inline Z8Bar sigma2(const Pairing& x, int k) {
    Z8Bar s(0);
    for (auto& g : x.two) s += sigma2_contribution(g, k);
    return s;
}

/// Level-k signature of the p-part (p odd): product of the residue classes
/// of the level-k units; +1 when the level is empty.
inline int sigma_odd(const Pairing& x, long long p, int k) {
    int s = 1;
    if (auto it = x.odd.find(p); it != x.odd.end())
        for (auto& g : it->second)
            if (g.level == k) s *= g.eps;
    return s;
}

/// A homogeneous quadratic form as refinement data over a Pairing. On the
/// odd part the refinement is unique, so plain generators suffice there.
struct QuadraticForm {
    std::vector<QGen2> two;
    std::map<long long, std::vector<GenOdd>> odd;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

inline void canonicalize(QuadraticForm& q) {
    std::sort(q.two.begin(), q.two.end());
    for (auto it = q.odd.begin(); it != q.odd.end();) {
        if (it->second.empty()) {
            it = q.odd.erase(it);
        } else {
            std::sort(it->second.begin(), it->second.end());
            ++it;
        }
    }
}

inline QuadraticForm make_quadratic(std::vector<QGen2> two, std::vector<GenOdd> odd = {}) {
    QuadraticForm q;
    for (auto& g : two) q.two.push_back(normalize(g));
    for (auto& g : odd) q.odd[g.p].push_back(g);
    canonicalize(q);
    return q;
}

inline QuadraticForm oplus(const QuadraticForm& a, const QuadraticForm& b) {
    QuadraticForm r = a;
    r.two.insert(r.two.end(), b.two.begin(), b.two.end());
    for (auto& [p, gens] : b.odd) {
        auto& dst = r.odd[p];
        dst.insert(dst.end(), gens.begin(), gens.end());
    }
    canonicalize(r);
    return r;
}

inline QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
    return oplus(a, b);
}

/// The polarization's generator sum: drops refinement data.
inline Pairing underlying_pairing(const QuadraticForm& q) {
    Pairing x;
    for (auto& g : q.two) x.two.push_back(underlying(g));
    x.odd = q.odd;
    canonicalize(x);
    return x;
}

}  // namespace linkforms
