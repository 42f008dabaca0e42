#pragma once

#include <numeric>
#include <set>
#include <vector>

#include "linkforms/pairing.hpp"

namespace linkforms {

/// A rational taken mod 1, kept reduced with 0 <= num < den.
struct QZ {
    long long num = 0;
    long long den = 1;

    QZ() = default;
    QZ(long long n, long long d) {
        if (d == 0) throw error("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        n = mod_pos(n, d);
        long long g = std::gcd(n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    friend QZ operator+(QZ a, QZ b) {
        long long d = std::lcm(a.den, b.den);
        return QZ(a.num * (d / a.den) + b.num * (d / b.den), d);
    }
    friend QZ operator-(QZ a, QZ b) {
        long long d = std::lcm(a.den, b.den);
        return QZ(a.num * (d / a.den) - b.num * (d / b.den), d);
    }
    QZ scaled(long long k) const { return QZ(mulmod(mod_pos(k, den), num, den), den); }

    bool is_zero() const { return num == 0; }
    friend bool operator==(const QZ&, const QZ&) = default;

    std::string str() const {
        return den == 1 ? std::string("0") : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// An explicit bilinear form on a presented finite abelian group
/// G = Z/d_1 x ... x Z/d_n: a symmetric matrix of rationals mod 1 with
/// d_i * B_ij integral.
struct GramPairing {
    std::vector<long long> orders;
    std::vector<std::vector<QZ>> gram;

    long long group_order() const {
        long long n = 1;
        for (long long d : orders) n *= d;
        return n;
    }
    std::size_t rank() const { return orders.size(); }
};

inline void validate(const GramPairing& g) {
    std::size_t n = g.orders.size();
    if (g.gram.size() != n) throw invalid_gram("gram matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (g.orders[i] < 2) throw invalid_gram("cyclic orders must be >= 2");
        if (g.gram[i].size() != n) throw invalid_gram("gram matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(g.gram[i][j] == g.gram[j][i])) throw invalid_gram("gram matrix not symmetric");
            if (g.orders[i] % g.gram[i][j].den != 0 || g.orders[j] % g.gram[i][j].den != 0)
                throw invalid_gram("entry " + g.gram[i][j].str() +
                                   " incompatible with generator orders");
        }
    }
}

/// lambda(x, y) for coordinate vectors.
inline QZ pair_value(const GramPairing& g, const std::vector<long long>& x,
                     const std::vector<long long>& y) {
    QZ v;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.rank(); ++j) {
            if (y[j] == 0) continue;
            v = v + g.gram[i][j].scaled(x[i]).scaled(y[j]);
        }
    }
    return v;
}

template <class F>
inline void for_each_element(const std::vector<long long>& orders, F&& f) {
    std::vector<long long> x(orders.size(), 0);
    while (true) {
        f(x);
        std::size_t i = 0;
        while (i < x.size()) {
            if (++x[i] < orders[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == x.size()) return;
    }
}

namespace detail {

/// Smith elimination over Z; returns true iff the cokernel of the column
/// span (as a subgroup of Z^rows) is trivial, i.e. all invariant factors 1.
inline bool snf_trivial_cokernel(std::vector<std::vector<long long>> a) {
    std::size_t rows = a.size();
    if (rows == 0) return true;
    std::size_t cols = a[0].size();
    std::size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // find pivot of least absolute value
        std::size_t pi = rows, pj = cols;
        long long best = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = c; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
                    best = std::abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // all zero
        std::swap(a[r], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pj]);
        bool clean = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
            long long q = a[i][c] / a[r][c];
            if (q != 0)
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
            if (a[i][c] != 0) clean = false;
        }
        for (std::size_t j = c + 1; j < cols; ++j) {
            long long q = a[r][j] / a[r][c];
            if (q != 0)
                for (std::size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
            if (a[r][j] != 0) clean = false;
        }
        if (!clean) continue;  // repeat with smaller entries
        if (std::abs(a[r][c]) != 1) return false;  // nontrivial invariant factor
        ++r;
        ++c;
    }
    return r == rows;
}

}  // namespace detail

/// Bijectivity of the adjoint G -> Hom(G, Q/Z), decided by exact integer
/// linear algebra on the presentation [adjoint columns | order relations].
inline bool nondegenerate(const GramPairing& g) {
    validate(g);
    std::size_t n = g.rank();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(2 * n, 0));
    for (std::size_t j = 0; j < n; ++j) {       // image of e_j in +_i Z/d_i
        for (std::size_t i = 0; i < n; ++i) {
            const QZ& b = g.gram[j][i];
            a[i][j] = mod_pos(b.num * (g.orders[i] / b.den), g.orders[i]);
        }
        a[j][n + j] = g.orders[j];
    }
    return detail::snf_trivial_cokernel(std::move(a));
}

/// Generators of the p-part: p-primary components of the presentation
/// basis. Cross-prime linking vanishes, so this is an orthogonal piece.
inline GramPairing p_part(const GramPairing& g, long long p) {
    GramPairing r;
    std::vector<std::size_t> idx;
    std::vector<long long> mult;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        int v = valuation(g.orders[i], p);
        if (v == 0) continue;
        idx.push_back(i);
        r.orders.push_back(ipow(p, v));
        mult.push_back(g.orders[i] / ipow(p, v));
    }
    r.gram.assign(idx.size(), std::vector<QZ>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            r.gram[a][b] = g.gram[idx[a]][idx[b]].scaled(mult[a]).scaled(mult[b]);
    return r;
}

inline std::vector<long long> primes_of(const GramPairing& g) {
    std::set<long long> ps;
    for (long long d : g.orders) {
        long long n = d;
        for (long long q = 2; q * q <= n; ++q)
            while (n % q == 0) {
                ps.insert(q);
                n /= q;
            }
        if (n > 1) ps.insert(n);
    }
    return {ps.begin(), ps.end()};
}

/// Block-diagonal Gram data for a generator sum.
inline GramPairing gram_of(const Pairing& x) {
    GramPairing g;
    auto blank = [&](std::size_t add) {
        std::size_t n = g.orders.size();
        for (auto& row : g.gram) row.resize(n + add);
        for (std::size_t i = 0; i < add; ++i) {
            g.gram.emplace_back(n + add);
        }
    };
    for (const Gen2& gen : x.two) {
        long long d = ipow(2, gen.level);
        std::size_t base = g.orders.size();
        if (gen.kind == Gen2Kind::Cyclic) {
            blank(1);
            g.orders.push_back(d);
            g.gram[base][base] = QZ(gen.residue, d);
        } else {
            blank(2);
            g.orders.push_back(d);
            g.orders.push_back(d);
            long long diag = gen.kind == Gen2Kind::E0 ? 0 : 2;
            g.gram[base][base] = QZ(diag, d);
            g.gram[base + 1][base + 1] = QZ(diag, d);
            g.gram[base][base + 1] = QZ(1, d);
            g.gram[base + 1][base] = QZ(1, d);
        }
    }
    for (auto& [p, gens] : x.odd)
        for (const GenOdd& gen : gens) {
            long long d = ipow(p, gen.level);
            std::size_t base = g.orders.size();
            blank(1);
            g.orders.push_back(d);
            g.gram[base][base] = QZ(canonical_unit(gen), d);
        }
    return g;
}

/// An explicit homogeneous quadratic form: base pairing plus the values
/// q(e_i). The induced form is
///   q(x) = sum_i x_i^2 q(e_i) + sum_{i<j} x_i x_j B_ij.
struct GramQuadratic {
    GramPairing base;
    std::vector<QZ> qvals;
};

inline void validate(const GramQuadratic& q) {
    validate(q.base);
    if (q.qvals.size() != q.base.rank()) throw invalid_gram("qvals size mismatch");
    for (std::size_t i = 0; i < q.qvals.size(); ++i) {
        if (!(q.qvals[i] + q.qvals[i] == q.base.gram[i][i]))
            throw invalid_gram("qvals inconsistent: 2 q(e_i) != B_ii");
        if ((2 * q.base.orders[i]) % q.qvals[i].den != 0)
            throw invalid_gram("q(e_i) denominator incompatible with generator order");
    }
}

inline QZ quad_value(const GramQuadratic& q, const std::vector<long long>& x) {
    QZ v;
    for (std::size_t i = 0; i < q.base.rank(); ++i) {
        if (x[i] == 0) continue;
        v = v + q.qvals[i].scaled(x[i]).scaled(x[i]);
        for (std::size_t j = i + 1; j < q.base.rank(); ++j)
            if (x[j] != 0) v = v + q.base.gram[i][j].scaled(x[i]).scaled(x[j]);
    }
    return v;
}

inline GramQuadratic p_part(const GramQuadratic& q, long long p) {
    GramQuadratic r;
    r.base = p_part(q.base, p);
    for (std::size_t i = 0; i < q.base.rank(); ++i) {
        int v = valuation(q.base.orders[i], p);
        if (v == 0) continue;
        long long m = q.base.orders[i] / ipow(p, v);
        r.qvals.push_back(q.qvals[i].scaled(m).scaled(m));
    }
    return r;
}

inline GramQuadratic gram_of(const QuadraticForm& f) {
    GramQuadratic q;
    // keep the block order of f itself, and keep cyclic residues mod 2^k
    // rather than the coarser pairing-canonical form, so that qvals stay
    // literally consistent with the base matrix
    Pairing under;
    for (const QGen2& gen : f.two) {
        Gen2 g = underlying(gen);
        if (gen.kind == QGen2Kind::QCyclic)
            g.residue = mod_pos(gen.abar, ipow(2, gen.level));
        under.two.push_back(g);
    }
    under.odd = f.odd;
    q.base = gram_of(under);
    for (const QGen2& gen : f.two) {
        long long dd = ipow(2, gen.level + 1);
        switch (gen.kind) {
            case QGen2Kind::QCyclic:
                q.qvals.push_back(QZ(gen.abar, dd));
                break;
            case QGen2Kind::QE0:
                q.qvals.push_back(QZ(gen.alpha, 2));
                q.qvals.push_back(QZ(gen.gamma, 2));
                break;
            case QGen2Kind::QE1:
                q.qvals.push_back(QZ(2 + gen.alpha * ipow(2, gen.level), dd));
                q.qvals.push_back(QZ(2 + gen.gamma * ipow(2, gen.level), dd));
                break;
        }
    }
    for (auto& [p, gens] : f.odd)
        for (const GenOdd& gen : gens) {
            long long d = ipow(p, gen.level);
            long long half = (d + 1) / 2;  // inverse of 2 mod d
            q.qvals.push_back(QZ(mulmod(canonical_unit(gen), half, d), d));
        }
    validate(q);
    return q;
}

}  // namespace linkforms
