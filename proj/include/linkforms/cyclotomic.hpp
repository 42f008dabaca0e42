#pragma once

#include <cmath>
#include <vector>

#include "linkforms/common.hpp"
#include "linkforms/numeric.hpp"
#include "linkforms/z8bar.hpp"

namespace linkforms {

/// An element of Z[zeta] for zeta a primitive 2^M-th root of unity, M >= 3,
/// in coordinates over the basis zeta^j, 0 <= j < 2^(M-1), with the
/// reduction zeta^(2^(M-1)) = -1. Equality, conjugation and the zero test
/// are exact; floating point enters only for the sign of a quantity already
/// known to be real.
class Cyc2 {
 public:
    explicit Cyc2(int log2_order) : m_(log2_order < 3 ? 3 : log2_order) {
        c_.assign(1LL << (m_ - 1), 0);
    }

    int log2_order() const { return m_; }
    long long order() const { return 1LL << m_; }

    /// Add zeta^e (e taken mod the order).
    void add_root(long long e, long long mult = 1) {
        long long n = order();
        e = mod_pos(e, n);
        if (e < n / 2)
            c_[e] += mult;
        else
            c_[e - n / 2] -= mult;
    }

    bool is_zero() const {
        for (long long v : c_)
            if (v != 0) return false;
        return true;
    }

    Cyc2 conj() const {
        Cyc2 r(m_);
        long long n = order();
        for (long long j = 0; j < n / 2; ++j)
            if (c_[j] != 0) r.add_root(mod_pos(n - j, n), c_[j]);
        return r;
    }

    /// Multiply by zeta_8^t.
    Cyc2 rotate8(int t) const {
        Cyc2 r(m_);
        long long step = order() / 8;
        for (long long j = 0; j < order() / 2; ++j)
            if (c_[j] != 0) r.add_root(j + t * step, c_[j]);
        return r;
    }

    bool operator==(const Cyc2& o) const { return m_ == o.m_ && c_ == o.c_; }

    bool is_real() const { return *this == conj(); }

    double eval_real() const {
        double s = 0;
        double n = static_cast<double>(order());
        for (long long j = 0; j < order() / 2; ++j)
            if (c_[j] != 0)
                s += static_cast<double>(c_[j]) * std::cos(2.0 * M_PI * static_cast<double>(j) / n);
        return s;
    }

 private:
    int m_;
    std::vector<long long> c_;
};

/// Direction of a nonzero sum known to point along an 8th root of unity:
/// the unique s in Z/8 with S * zeta_8^(-s) exactly real and positive.
/// Returns inf for the zero sum.
inline Z8Bar direction8(const Cyc2& s) {
    if (s.is_zero()) return Z8Bar::inf();
    for (int k = 0; k < 8; ++k) {
        Cyc2 rot = s.rotate8(-k);
        if (!rot.is_real()) continue;
        double v = rot.eval_real();
        if (std::abs(v) < 1e-6)
            throw unreachable_state("exactly-real cyclotomic sum evaluates near zero");
        if (v > 0) return Z8Bar(k);
    }
    throw unreachable_state("no real-positive direction among 8th roots of unity");
}

/// An element of Z[zeta] for zeta a primitive p^J-th root of unity, p odd.
/// Stored over exponents 0..p^J-1 and canonicalized through the relation
/// sum_{i<p} zeta^(i p^(J-1)) = 0. Only reality tests are needed here: a
/// nondegenerate quadratic Gauss sum over an odd group points along
/// {1,-1,i,-i}.
class CycOdd {
 public:
    CycOdd(long long p, int j) : p_(p), j_(j), n_(ipow(p, j)) { c_.assign(n_, 0); }

    void add_root(long long e, long long mult = 1) { c_[mod_pos(e, n_)] += mult; }

    void canonicalize() {
        long long block = n_ / p_;                 // p^(J-1)
        long long phi = (p_ - 1) * block;
        for (long long e = phi; e < n_; ++e) {
            if (c_[e] == 0) continue;
            long long t = e - phi;
            for (long long i = 0; i + 1 < p_; ++i) c_[i * block + t] -= c_[e];
            c_[e] = 0;
        }
    }

    CycOdd conj() const {
        CycOdd r(p_, j_);
        for (long long e = 0; e < n_; ++e)
            if (c_[e] != 0) r.add_root(mod_pos(n_ - e, n_), c_[e]);
        return r;
    }

    bool equals(const CycOdd& o) const {
        CycOdd a = *this, b = o;
        a.canonicalize();
        b.canonicalize();
        return a.c_ == b.c_;
    }

    bool is_zero() const {
        CycOdd a = *this;
        a.canonicalize();
        for (long long v : a.c_)
            if (v != 0) return false;
        return true;
    }

    bool is_real() const { return equals(conj()); }

    bool is_imaginary() const {
        CycOdd s = *this;
        CycOdd cj = conj();
        for (long long e = 0; e < n_; ++e) s.c_[e] += cj.c_[e];
        return s.is_zero();
    }

    double eval_real() const {
        double s = 0;
        for (long long e = 0; e < n_; ++e)
            if (c_[e] != 0)
                s += static_cast<double>(c_[e]) *
                     std::cos(2.0 * M_PI * static_cast<double>(e) / static_cast<double>(n_));
        return s;
    }

    double eval_imag() const {
        double s = 0;
        for (long long e = 0; e < n_; ++e)
            if (c_[e] != 0)
                s += static_cast<double>(c_[e]) *
                     std::sin(2.0 * M_PI * static_cast<double>(e) / static_cast<double>(n_));
        return s;
    }

 private:
    long long p_;
    int j_;
    long long n_;
    std::vector<long long> c_;
};

/// Direction in {0,2,4,6} (as a Z/8 argument) of a nonzero odd-group Gauss
/// sum. Throws if the sum is zero or not along {1,-1,i,-i}.
inline int direction_quarter(const CycOdd& s) {
    if (s.is_zero()) throw unreachable_state("odd quadratic Gauss sum vanished");
    if (s.is_real()) {
        double v = s.eval_real();
        if (std::abs(v) < 1e-6)
            throw unreachable_state("exactly-real cyclotomic sum evaluates near zero");
        return v > 0 ? 0 : 4;
    }
    if (s.is_imaginary()) {
        double v = s.eval_imag();
        if (std::abs(v) < 1e-6)
            throw unreachable_state("exactly-imaginary cyclotomic sum evaluates near zero");
        return v > 0 ? 2 : 6;
    }
    throw unreachable_state("odd Gauss sum not along a 4th root of unity");
}

}  // namespace linkforms
