#pragma once

#include <compare>
#include <string>
#include <tuple>

#include "linkforms/numeric.hpp"
#include "linkforms/z8bar.hpp"

namespace linkforms {

/// Generators of linking pairings on 2-groups.
///
///   Cyclic{k,a}  the pairing on Z/2^k sending (1,1) to a/2^k, a odd
///   E0{k}        (x y' + x' y) / 2^k            on (Z/2^k)^2, k >= 1
///   E1{k}        (2xx' + xy' + x'y + 2yy')/2^k  on (Z/2^k)^2, k >= 2
///
/// A cyclic generator depends only on its residue mod 2^min(k,3), which is
/// the stored canonical form.
enum class Gen2Kind { Cyclic, E0, E1 };

struct Gen2 {
    Gen2Kind kind = Gen2Kind::Cyclic;
    int level = 1;
    long long residue = 1;  // canonical; 0 for E0/E1

    friend auto operator<=>(const Gen2&, const Gen2&) = default;
};

inline long long canonical_residue2(int level, long long a) {
    long long m = ipow(2, level < 3 ? level : 3);
    return mod_pos(a, m);
}

inline Gen2 normalize(Gen2 g) {
    if (g.level < 1) throw invalid_generator("generator level must be >= 1");
    switch (g.kind) {
        case Gen2Kind::Cyclic:
            if (mod_pos(g.residue, 2) == 0)
                throw invalid_generator("cyclic residue must be odd");
            g.residue = canonical_residue2(g.level, g.residue);
            return g;
        case Gen2Kind::E0:
            g.residue = 0;
            return g;
        case Gen2Kind::E1:
            if (g.level < 2) throw invalid_generator("E1 requires level >= 2");
            g.residue = 0;
            return g;
    }
    throw invalid_generator("bad generator kind");
}

inline Gen2 cyclic2(int level, long long a) { return normalize(Gen2{Gen2Kind::Cyclic, level, a}); }
inline Gen2 e0(int level) { return normalize(Gen2{Gen2Kind::E0, level, 0}); }
inline Gen2 e1(int level) { return normalize(Gen2{Gen2Kind::E1, level, 0}); }

inline int rank_of(const Gen2& g) { return g.kind == Gen2Kind::Cyclic ? 1 : 2; }

/// Cyclic generator on Z/p^k for an odd prime p. Only the quadratic-residue
/// class of the defining unit matters; eps carries it. The canonical unit is
/// 1 for eps = +1 and the least positive nonresidue otherwise.
struct GenOdd {
    long long p = 3;
    int level = 1;
    int eps = 1;

    friend auto operator<=>(const GenOdd&, const GenOdd&) = default;
};

inline GenOdd odd_gen(long long p, int level, long long unit) {
    if (p == 2 || !is_prime(p)) throw invalid_generator("p must be an odd prime");
    if (level < 1) throw invalid_generator("generator level must be >= 1");
    return GenOdd{p, level, legendre(unit, p)};
}

inline long long canonical_unit(const GenOdd& g) {
    return g.eps == 1 ? 1 : least_nonresidue(g.p);
}

/// Homogeneous quadratic refinements of the 2-adic generators.
///
///   QCyclic{k,abar}    q(x)   = abar x^2 / 2^(k+1), abar odd mod 2^(k+1)
///   QE0{k,alpha,gamma} q(x,y) = (2xy  + alpha 2^k x^2 + gamma 2^k y^2) / 2^(k+1)
///   QE1{k,alpha,gamma} q(x,y) = (2x^2 + 2xy + 2y^2
///                                      + alpha 2^k x^2 + gamma 2^k y^2) / 2^(k+1)
enum class QGen2Kind { QCyclic, QE0, QE1 };

struct QGen2 {
    QGen2Kind kind = QGen2Kind::QCyclic;
    int level = 1;
    long long abar = 1;  // QCyclic only
    int alpha = 0;
    int gamma = 0;

    friend auto operator<=>(const QGen2&, const QGen2&) = default;
};

inline QGen2 normalize(QGen2 q) {
    if (q.level < 1) throw invalid_generator("generator level must be >= 1");
    switch (q.kind) {
        case QGen2Kind::QCyclic:
            if (mod_pos(q.abar, 2) == 0)
                throw invalid_generator("quadratic cyclic residue must be odd");
            q.abar = mod_pos(q.abar, ipow(2, q.level + 1));
            q.alpha = q.gamma = 0;
            return q;
        case QGen2Kind::QE1:
            if (q.level < 2) throw invalid_generator("QE1 requires level >= 2");
            [[fallthrough]];
        case QGen2Kind::QE0:
            if ((q.alpha != 0 && q.alpha != 1) || (q.gamma != 0 && q.gamma != 1))
                throw invalid_generator("alpha, gamma must be 0 or 1");
            q.abar = 0;
            return q;
    }
    throw invalid_generator("bad generator kind");
}

inline QGen2 qcyclic(int level, long long abar) {
    return normalize(QGen2{QGen2Kind::QCyclic, level, abar, 0, 0});
}
inline QGen2 qe0(int level, int alpha, int gamma) {
    return normalize(QGen2{QGen2Kind::QE0, level, 0, alpha, gamma});
}
inline QGen2 qe1(int level, int alpha, int gamma) {
    return normalize(QGen2{QGen2Kind::QE1, level, 0, alpha, gamma});
}

inline int rank_of(const QGen2& g) { return g.kind == QGen2Kind::QCyclic ? 1 : 2; }

/// Drop refinement data.
inline Gen2 underlying(const QGen2& q) {
    switch (q.kind) {
        case QGen2Kind::QCyclic:
            return cyclic2(q.level, mod_pos(q.abar, ipow(2, q.level)));
        case QGen2Kind::QE0:
            return e0(q.level);
        case QGen2Kind::QE1:
            return e1(q.level);
    }
    throw invalid_generator("bad generator kind");
}

}  // namespace linkforms
