#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkforms/z8bar.hpp"

namespace linkforms {

/// Invariant tables: finitely supported maps index -> (rank, signature).
///
/// Flavors:
///   Two        indices start at 1, signatures in Z8Bar
///   Odd(p)     indices start at 1, signatures are signs ({0,4} in Z/8)
///   Quadratic  indices start at 0, signatures in Z8Bar, r(0) = 0
///
/// Unsupported indices read as (0, 0), which is the genuine invariant value
/// beyond the exponent ((0, +1) under the sign encoding).
enum class Flavor { Two, Odd, Quadratic };

struct TableEntry {
    long long r = 0;
    Z8Bar s = Z8Bar(0);

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

class Table {
 public:
    Table() = default;
    explicit Table(Flavor f, long long odd_prime = 0) : flavor_(f), odd_prime_(odd_prime) {}

    static Table two() { return Table(Flavor::Two); }
    static Table odd(long long p) { return Table(Flavor::Odd, p); }
    static Table quadratic() { return Table(Flavor::Quadratic); }

    Flavor flavor() const { return flavor_; }
    long long odd_prime() const { return odd_prime_; }
    int min_index() const { return flavor_ == Flavor::Quadratic ? 0 : 1; }

    TableEntry at(int k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? TableEntry{} : it->second;
    }

    void set(int k, long long r, Z8Bar s) {
        if (k < min_index()) throw error("table index below domain minimum");
        if (r < 0) throw error("table rank must be nonnegative");
        if (r == 0 && s == Z8Bar(0))
            entries_.erase(k);
        else
            entries_[k] = TableEntry{r, s};
    }

    const std::map<int, TableEntry>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }

    int max_index() const { return entries_.empty() ? min_index() : entries_.rbegin()->first; }

    bool regular(int k) const {
        TableEntry e = at(k);
        return e.r == 0 || !e.s.is_inf();
    }

    friend bool operator==(const Table&, const Table&) = default;

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (auto& [k, e] : entries_) {
            if (!first) os << ", ";
            first = false;
            os << k << ":(" << e.r << ",";
            if (flavor_ == Flavor::Odd)
                os << (z8_to_sign(e.s) == 1 ? "+1" : "-1");
            else
                os << e.s.str();
            os << ")";
        }
        os << "}";
        return os.str();
    }

 private:
    Flavor flavor_ = Flavor::Two;
    long long odd_prime_ = 0;
    std::map<int, TableEntry> entries_;
};

/// Pointwise sum. Ranks add in N; signatures add in Z8Bar (for the odd
/// flavor this is the sign product under the {0,4} encoding).
inline Table table_sum(const Table& a, const Table& b) {
    if (a.flavor() != b.flavor() || a.odd_prime() != b.odd_prime())
        throw error("table flavor mismatch");
    Table r = a;
    for (auto& [k, e] : b.entries()) {
        TableEntry cur = r.at(k);
        r.set(k, cur.r + e.r, cur.s + e.s);
    }
    return r;
}

/// Characteristic predicate of the regular indices, over the trivially
/// extended domain.
inline auto regular_set(const Table& t) {
    return [t](int k) { return k >= t.min_index() && t.regular(k); };
}

enum class WindowType { T0, T1, T2, T3 };

inline const char* window_name(WindowType w) {
    switch (w) {
        case WindowType::T0: return "T0";
        case WindowType::T1: return "T1";
        case WindowType::T2: return "T2";
        case WindowType::T3: return "T3";
    }
    return "?";
}

struct Window {
    WindowType type;
    int m;  // left delimiter
    int n;  // right delimiter

    friend bool operator==(const Window&, const Window&) = default;
};

/// All extracted subintervals [m+1, n-1] matching a type definition, with
/// both delimiters m, n regular and inside the domain. A window of zero
/// ranks is emitted both as T0 and as T3. Right delimiters are capped at
/// max support + 2: beyond that the classification and both signature
/// values repeat with period 2.
inline std::vector<Window> windows(const Table& t) {
    if (t.flavor() == Flavor::Odd) throw error("windows: flavor must be two or quadratic");
    std::vector<Window> out;
    int lo = t.min_index();
    int hi = t.max_index() + 2;
    for (int m = lo; m + 2 <= hi; ++m) {
        if (!t.regular(m)) continue;
        for (int n = m + 2; n <= hi; ++n) {
            if (!t.regular(n)) continue;
            int len = n - m - 1;
            if (len == 1) {
                TableEntry e = t.at(m + 1);
                if (e.r == 1 && e.s.is_inf()) {
                    out.push_back({WindowType::T1, m, n});
                    continue;
                }
                if (e.r == 2 && e.s.is_inf()) {
                    out.push_back({WindowType::T2, m, n});
                    continue;
                }
            }
            if (len % 2 == 1) {
                bool all_zero_rank = true, all_regular = true;
                for (int j = m + 1; j < n; ++j) {
                    if (t.at(j).r != 0) all_zero_rank = false;
                    if (!t.regular(j)) all_regular = false;
                }
                if (all_zero_rank) out.push_back({WindowType::T0, m, n});
                if (all_regular) out.push_back({WindowType::T3, m, n});
            }
        }
    }
    return out;
}

struct Violation {
    std::string condition;      // C1, C2, C3, C4-T0..C4-T3, ODD, Q0
    std::vector<int> indices;
    std::string detail;
};

struct AdmissibilityReport {
    bool verdict = true;
    std::vector<Violation> violations;

    std::string str() const {
        std::ostringstream os;
        if (verdict) {
            os << "admissible";
        } else {
            os << "inadmissible:";
            for (auto& v : violations) {
                os << "\n  " << v.condition << " at";
                for (int k : v.indices) os << " " << k;
                os << ": " << v.detail;
            }
        }
        return os.str();
    }
};

struct inadmissible_error : error {
    explicit inadmissible_error(AdmissibilityReport r)
        : error("table is not admissible: " + r.str()), report(std::move(r)) {}
    AdmissibilityReport report;
};

namespace detail {

inline void add_violation(AdmissibilityReport& rep, std::string cond, std::vector<int> idx,
                          std::string detail) {
    rep.verdict = false;
    rep.violations.push_back({std::move(cond), std::move(idx), std::move(detail)});
}

}  // namespace detail

/// Decision procedure for admissibility, all three flavors. Every violated
/// condition instance is reported; checks never short-circuit.
inline AdmissibilityReport check_admissible(const Table& t) {
    AdmissibilityReport rep;

    if (t.flavor() == Flavor::Odd) {
        for (auto& [k, e] : t.entries()) {
            if (e.s.is_inf() || (e.s.value() != 0 && e.s.value() != 4)) {
                detail::add_violation(rep, "ODD", {k},
                                      "signature " + e.s.str() + " is not a sign");
                continue;
            }
            if (e.r == 0 && e.s != Z8Bar(0))
                detail::add_violation(rep, "ODD", {k}, "r = 0 forces s = +1");
        }
        return rep;
    }

    if (t.flavor() == Flavor::Quadratic) {
        TableEntry e0 = t.at(0);
        if (e0.r != 0)
            detail::add_violation(rep, "Q0", {0}, "r(0) must be 0");
        if (e0.s.is_inf())
            detail::add_violation(rep, "Q0", {0}, "s(0) must be finite");
    }

    int lo = t.min_index();
    int hi = t.max_index();

    auto suffix_rank = [&](int from) {
        long long sum = 0;
        for (auto& [k, e] : t.entries())
            if (k >= from) sum += e.r;
        return sum;
    };

    // (1) even rank at regular indices
    for (int m = lo; m <= hi; ++m) {
        TableEntry e = t.at(m);
        if (t.regular(m) && e.r % 2 != 0)
            detail::add_violation(rep, "C1", {m},
                                  "odd rank " + std::to_string(e.r) + " at regular index");
    }

    // (2) s(m) = sum_{k >= m+1} r(k) mod 2 at regular indices
    for (int m = lo; m <= hi; ++m) {
        if (!t.regular(m)) continue;
        TableEntry e = t.at(m);
        long long target = suffix_rank(m + 1);
        if (e.s.is_inf())
            detail::add_violation(rep, "C2", {m}, "s = inf at regular index");
        else if (mod_pos(e.s.value() - target, 2) != 0)
            detail::add_violation(rep, "C2", {m},
                                  "s = " + e.s.str() + " but rank suffix sum = " +
                                      std::to_string(target) + " (mod 2)");
    }

    // (3) s(m) + s(m+1) = 2 sum_{k >= m+2} r(k) mod 4 on consecutive regular pairs
    for (int m = lo; m <= hi; ++m) {
        if (!t.regular(m) || !t.regular(m + 1)) continue;
        TableEntry a = t.at(m), b = t.at(m + 1);
        if (a.s.is_inf() || b.s.is_inf()) {
            detail::add_violation(rep, "C3", {m, m + 1}, "s = inf at regular index");
            continue;
        }
        long long target = 2 * suffix_rank(m + 2);
        if (mod_pos(a.s.value() + b.s.value() - target, 4) != 0)
            detail::add_violation(rep, "C3", {m, m + 1},
                                  "s(m)+s(m+1) = " + std::to_string(a.s.value() + b.s.value()) +
                                      " but 2*(rank suffix sum) = " + std::to_string(target) +
                                      " (mod 4)");
    }

    // (4) delimiter differences per window type
    for (const Window& w : windows(t)) {
        Z8Bar d = t.at(w.m).s - t.at(w.n).s;
        bool ok = false;
        if (!d.is_inf()) {
            int v = d.value();
            switch (w.type) {
                case WindowType::T0: ok = v == 0; break;
                case WindowType::T1: ok = v == 1 || v == 7; break;
                case WindowType::T2: ok = v == 0 || v == 2 || v == 6; break;
                case WindowType::T3: ok = v == 0 || v == 4; break;
            }
        }
        if (!ok)
            detail::add_violation(
                rep, std::string("C4-") + window_name(w.type), {w.m, w.n},
                "s(" + std::to_string(w.m) + ") - s(" + std::to_string(w.n) + ") = " + d.str());
    }

    return rep;
}

}  // namespace linkforms
