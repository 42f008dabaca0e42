#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "linkforms/cyclotomic.hpp"
#include "linkforms/generators.hpp"

namespace linkforms {

namespace detail {

inline int sigma0_compute(const QGen2& g) {
    long long d = ipow(2, g.level);
    long long dd = 2 * d;
    if (g.kind == QGen2Kind::QCyclic) {
        if (d > (1LL << 12)) throw resource_error("sigma0: generator group too large");
        Cyc2 sum(std::max(3, g.level + 1));
        long long n = sum.order();
        for (long long x = 0; x < d; ++x) sum.add_root(mod_pos(g.abar * x * x, dd) * (n / dd));
        Z8Bar s = direction8(sum);
        if (s.is_inf()) throw unreachable_state("sigma0: cyclic generator sum vanished");
        return s.value();
    }
    if (d * d > (1LL << 12)) throw resource_error("sigma0: generator group too large");
    long long diag = g.kind == QGen2Kind::QE0 ? 0 : 2;
    Cyc2 sum(std::max(3, g.level + 1));
    long long n = sum.order();
    for (long long x = 0; x < d; ++x)
        for (long long y = 0; y < d; ++y) {
            long long num = 2 * x * y + diag * (x * x + y * y) + g.alpha * d * x * x +
                            g.gamma * d * y * y;
            sum.add_root(mod_pos(num, dd) * (n / dd));
        }
    Z8Bar s = direction8(sum);
    if (s.is_inf()) throw unreachable_state("sigma0: E generator sum vanished");
    return s.value();
}

inline int sigma0_compute(const GenOdd& g) {
    long long d = ipow(g.p, g.level);
    if (d > (1LL << 12)) throw resource_error("sigma0: generator group too large");
    long long c = mulmod(canonical_unit(g), (d + 1) / 2, d);  // q(x) = c x^2 / d
    CycOdd sum(g.p, g.level);
    for (long long x = 0; x < d; ++x) sum.add_root(mulmod(mulmod(x, x, d), c, d));
    return direction_quarter(sum);
}

}  // namespace detail

/// Argument of the generator's Gauss sum gamma, in Z/8. No closed form is
/// used: each generator symbol is summed exactly once and memoized.
inline int sigma0(const QGen2& g) {
    static std::map<std::tuple<QGen2Kind, int, long long, int, int>, int> cache;
    static std::mutex mu;
    auto key = std::make_tuple(g.kind, g.level, g.abar, g.alpha, g.gamma);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    int v = detail::sigma0_compute(g);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

inline int sigma0(const GenOdd& g) {
    static std::map<std::tuple<long long, int, int>, int> cache;
    static std::mutex mu;
    auto key = std::make_tuple(g.p, g.level, g.eps);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    int v = detail::sigma0_compute(g);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

}  // namespace linkforms
