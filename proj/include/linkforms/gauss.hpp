#pragma once

#include <set>

#include "linkforms/cyclotomic.hpp"
#include "linkforms/gram.hpp"
#include "linkforms/table.hpp"

namespace linkforms {

namespace detail {

inline void check_enumeration_bound(long long group_order, long long bound, const char* who) {
    if (group_order > bound)
        throw resource_error(std::string(who) + ": group order " + std::to_string(group_order) +
                             " exceeds bound " + std::to_string(bound));
}

/// Direction of sum_x exp(2 pi i c q(x)) over the 2-part, where values(x)
/// is a QZ with 2-power denominator. Returns inf exactly when the sum is 0.
template <class Values>
inline Z8Bar two_part_direction(const std::vector<long long>& orders, Values&& value_of) {
    int maxv = 3;
    for (long long d : orders) maxv = std::max(maxv, valuation(d, 2) + 1);
    Cyc2 sum(maxv);
    long long n = sum.order();
    for_each_element(orders, [&](const std::vector<long long>& x) {
        QZ v = value_of(x);
        sum.add_root(v.num * (n / v.den));
    });
    return direction8(sum);
}

template <class Values>
inline int odd_part_direction(long long p, const std::vector<long long>& orders,
                              Values&& value_of) {
    int maxv = 0;
    for (long long d : orders) maxv = std::max(maxv, valuation(d, p));
    CycOdd sum(p, maxv);
    long long n = ipow(p, maxv);
    for_each_element(orders, [&](const std::vector<long long>& x) {
        QZ v = value_of(x);
        sum.add_root(v.num * (n / v.den));
    });
    return direction_quarter(sum);
}

}  // namespace detail

/// Exact Gauss sum Gamma_k = sum_x exp(i pi 2^k lambda(x,x)): the level-k
/// signature of g. Works prime by prime; the odd components never vanish,
/// so the result is inf exactly when the 2-part sum is zero.
inline Z8Bar gauss_sum_2(const GramPairing& g, int k, const Limits& lim = default_limits()) {
    validate(g);
    detail::check_enumeration_bound(g.group_order(), lim.gauss_group_order, "gauss_sum_2");
    if (k < 1) throw precondition_error("gauss_sum_2: level must be >= 1");
    Z8Bar total(0);
    for (long long p : primes_of(g)) {
        GramPairing pp = p_part(g, p);
        // exp(i pi 2^k v) = exp(2 pi i 2^(k-1) v)
        auto value_of = [&](const std::vector<long long>& x) {
            QZ v = pair_value(pp, x, x);
            return QZ(v.num * ipow(2, k - 1), v.den);
        };
        if (p == 2) {
            Z8Bar d = detail::two_part_direction(pp.orders, value_of);
            if (d.is_inf()) return Z8Bar::inf();
            total += d;
        } else {
            total += Z8Bar(detail::odd_part_direction(p, pp.orders, value_of));
        }
    }
    return total;
}

/// Exact Gauss sum gamma(q) = sum_x exp(2 pi i q(x)). Nondegenerate input
/// never sums to zero, so the argument is a plain Z/8 residue.
inline int gauss_sum_quad(const GramQuadratic& q, const Limits& lim = default_limits()) {
    validate(q);
    detail::check_enumeration_bound(q.base.group_order(), lim.gauss_group_order,
                                    "gauss_sum_quad");
    int total = 0;
    for (long long p : primes_of(q.base)) {
        GramQuadratic pp = p_part(q, p);
        auto value_of = [&](const std::vector<long long>& x) { return quad_value(pp, x); };
        if (p == 2) {
            Z8Bar d = detail::two_part_direction(pp.base.orders, value_of);
            if (d.is_inf())
                throw precondition_error("gauss_sum_quad: sum vanished (degenerate input)");
            total += d.value();
        } else {
            total += detail::odd_part_direction(p, pp.base.orders, value_of);
        }
    }
    return mod_pos(total, 8);
}

/// Classical splitting of an odd p-part into cyclic factors: repeatedly
/// pick the first element (coordinate order) whose self-linking has maximal
/// order, split off the cyclic summand it generates, and recurse on its
/// orthogonal complement.
inline std::vector<GenOdd> diagonalize_odd(const GramPairing& g, long long p,
                                           const Limits& lim = default_limits()) {
    if (p == 2 || !is_prime(p)) throw precondition_error("diagonalize_odd: p must be an odd prime");
    validate(g);
    GramPairing pp = p_part(g, p);
    detail::check_enumeration_bound(pp.group_order(), lim.enumerate_group_order,
                                    "diagonalize_odd");
    std::set<std::vector<long long>> H;
    for_each_element(pp.orders, [&](const std::vector<long long>& x) { H.insert(x); });

    auto order_of = [&](const std::vector<long long>& x) {
        long long o = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            o = std::lcm(o, pp.orders[i] / std::gcd(x[i], pp.orders[i]));
        return o;
    };

    std::vector<GenOdd> out;
    while (H.size() > 1) {
        const std::vector<long long>* best = nullptr;
        long long best_den = 1;
        for (auto& x : H) {
            long long den = pair_value(pp, x, x).den;
            if (den > best_den) {
                best_den = den;
                best = &x;
            }
        }
        if (!best)
            throw unreachable_state("diagonalize_odd: no splitting vector on nontrivial group");
        std::vector<long long> x = *best;
        QZ self = pair_value(pp, x, x);
        if (order_of(x) != self.den)
            throw unreachable_state("diagonalize_odd: splitting vector order mismatch");
        int k = valuation(self.den, p);
        out.push_back(GenOdd{p, k, legendre(self.num, p)});
        long long ainv = inverse_mod(self.num, self.den);

        std::set<std::vector<long long>> next;
        for (auto& y : H) {
            QZ pv = pair_value(pp, x, y);
            long long b = pv.num * (self.den / pv.den);
            long long c = mulmod(b, ainv, self.den);
            std::vector<long long> yp(y);
            for (std::size_t i = 0; i < yp.size(); ++i)
                yp[i] = mod_pos(yp[i] - c * x[i], pp.orders[i]);
            next.insert(std::move(yp));
        }
        H = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Invariant table of the p-part of explicit Gram data: ranks are read off
/// the presentation orders, signatures come from exact Gauss sums (p = 2)
/// or the cyclic splitting (p odd).
inline Table gram_invariant_table(const GramPairing& g, long long p,
                                  const Limits& lim = default_limits()) {
    validate(g);
    if (!nondegenerate(g)) throw precondition_error("gram_invariant_table: degenerate pairing");
    GramPairing pp = p_part(g, p);
    std::map<int, long long> ranks;
    int maxk = 0;
    for (long long d : pp.orders) {
        int v = valuation(d, p);
        ranks[v] += 1;
        maxk = std::max(maxk, v);
    }
    if (p == 2) {
        Table t = Table::two();
        for (int k = 1; k <= maxk; ++k)
            t.set(k, ranks.count(k) ? ranks[k] : 0, gauss_sum_2(pp, k, lim));
        return t;
    }
    Table t = Table::odd(p);
    std::map<int, int> signs;
    for (const GenOdd& gen : diagonalize_odd(pp, p, lim)) {
        auto [it, fresh] = signs.emplace(gen.level, gen.eps);
        if (!fresh) it->second *= gen.eps;
    }
    for (int k = 1; k <= maxk; ++k) {
        int s = signs.count(k) ? signs[k] : 1;
        t.set(k, ranks.count(k) ? ranks[k] : 0, sign_to_z8(s));
    }
    return t;
}

}  // namespace linkforms
