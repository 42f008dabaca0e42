#pragma once

#include <optional>

#include "linkforms/gauss.hpp"

namespace linkforms {

/// Deterministic stream of all nondegenerate pairings on a presented group:
/// every compatible symmetric matrix mod 1, filtered by nondegeneracy.
class PairingEnumerator {
 public:
    explicit PairingEnumerator(std::vector<long long> orders,
                               const Limits& lim = default_limits())
        : orders_(std::move(orders)) {
        long long n = 1;
        for (long long d : orders_) {
            if (d < 2) throw invalid_gram("cyclic orders must be >= 2");
            n *= d;
        }
        detail::check_enumeration_bound(n, lim.enumerate_group_order, "enumerate_pairings");
        for (std::size_t i = 0; i < orders_.size(); ++i)
            for (std::size_t j = i; j < orders_.size(); ++j)
                slots_.push_back({i, j, std::gcd(orders_[i], orders_[j])});
        counters_.assign(slots_.size(), 0);
    }

    std::optional<GramPairing> next() {
        while (!done_) {
            GramPairing g = current();
            advance();
            if (nondegenerate(g)) return g;
        }
        return std::nullopt;
    }

 private:
    struct Slot {
        std::size_t i, j;
        long long modulus;
    };

    GramPairing current() const {
        GramPairing g;
        g.orders = orders_;
        g.gram.assign(orders_.size(), std::vector<QZ>(orders_.size()));
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            QZ v(counters_[s], slots_[s].modulus);
            g.gram[slots_[s].i][slots_[s].j] = v;
            g.gram[slots_[s].j][slots_[s].i] = v;
        }
        return g;
    }

    void advance() {
        std::size_t s = 0;
        while (s < slots_.size()) {
            if (++counters_[s] < slots_[s].modulus) return;
            counters_[s] = 0;
            ++s;
        }
        done_ = true;
    }

    std::vector<long long> orders_;
    std::vector<Slot> slots_;
    std::vector<long long> counters_;
    bool done_ = false;
};

namespace detail {

inline std::map<long long, std::multiset<int>> group_type(const std::vector<long long>& orders) {
    std::map<long long, std::multiset<int>> t;
    for (long long d : orders) {
        long long n = d;
        for (long long q = 2; q * q <= n; ++q) {
            if (n % q) continue;
            int v = 0;
            while (n % q == 0) {
                n /= q;
                ++v;
            }
            t[q].insert(v);
        }
        if (n > 1) t[n].insert(1);
    }
    return t;
}

}  // namespace detail

/// Exhaustive search for a group isomorphism carrying one pairing to the
/// other. Ground truth for the invariant machinery on small groups.
inline bool brute_isomorphic(const GramPairing& g1, const GramPairing& g2,
                             const Limits& lim = default_limits()) {
    validate(g1);
    validate(g2);
    if (!nondegenerate(g1) || !nondegenerate(g2))
        throw precondition_error("brute_isomorphic: degenerate input");
    long long n1 = g1.group_order(), n2 = g2.group_order();
    detail::check_enumeration_bound(std::max(n1, n2), lim.iso_group_order, "brute_isomorphic");
    if (n1 != n2) return false;
    if (detail::group_type(g1.orders) != detail::group_type(g2.orders)) return false;

    struct Elem {
        std::vector<long long> x;
        long long order;
    };
    std::vector<Elem> elems;
    for_each_element(g2.orders, [&](const std::vector<long long>& x) {
        long long o = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            o = std::lcm(o, g2.orders[i] / std::gcd(x[i], g2.orders[i]));
        elems.push_back({x, o});
    });

    std::size_t n = g1.rank();
    std::vector<const Elem*> image(n, nullptr);

    auto generates = [&]() {
        std::set<std::vector<long long>> closure;
        closure.insert(std::vector<long long>(g2.rank(), 0));
        // add generators one by one, closing under addition
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<long long>& y = image[i]->x;
            std::set<std::vector<long long>> grown;
            for (auto& base : closure) {
                std::vector<long long> cur = base;
                for (long long c = 0; c < g1.orders[i]; ++c) {
                    grown.insert(cur);
                    for (std::size_t t = 0; t < cur.size(); ++t)
                        cur[t] = mod_pos(cur[t] + y[t], g2.orders[t]);
                }
            }
            closure = std::move(grown);
        }
        return static_cast<long long>(closure.size()) == n1;
    };

    std::vector<std::vector<long long>> basis1(n);
    for (std::size_t i = 0; i < n; ++i) {
        basis1[i].assign(n, 0);
        basis1[i][i] = 1;
    }

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return generates();
        for (const Elem& cand : elems) {
            if (cand.order != g1.orders[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j) {
                const std::vector<long long>& yj = j == i ? cand.x : image[j]->x;
                if (!(pair_value(g2, cand.x, yj) == pair_value(g1, basis1[i], basis1[j])))
                    ok = false;
            }
            if (!ok) continue;
            image[i] = &cand;
            if (self(self, i + 1)) return true;
            image[i] = nullptr;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace linkforms
