#pragma once

#include "linkforms/realize.hpp"

namespace linkforms {

/// The family of candidate complement tables for "is part an orthogonal
/// summand of whole": ranks are forced, signatures are forced wherever the
/// part's signature is finite, and range over all of Z8Bar at the free
/// indices {m : sigma_m(part) = inf}.
struct CandidateFamily {
    Table base;                     // fixed entries
    std::vector<int> free_indices;  // ascending
    std::optional<std::string> failed;  // necessary-condition failure tag
};

namespace detail {

inline CandidateFamily candidate_family_2adic(const Pairing& whole, const Pairing& part) {
    CandidateFamily fam;
    fam.base = Table::two();
    int maxk = std::max(max_level(whole, 2), max_level(part, 2));
    for (int k = 1; k <= maxk; ++k) {
        long long rw = rho(whole, 2, k), rp = rho(part, 2, k);
        if (rp > rw) {
            fam.failed = "rankgeq";
            return fam;
        }
        Z8Bar sw = sigma2(whole, k), sp = sigma2(part, k);
        if (sp.is_inf() && !sw.is_inf()) {
            fam.failed = "inftyinfty";
            return fam;
        }
        if (sp.is_inf())
            fam.free_indices.push_back(k);
        else
            fam.base.set(k, rw - rp, sw - sp);
    }
    // free indices need their rank entries too
    for (int k : fam.free_indices) {
        long long rw = rho(whole, 2, k), rp = rho(part, 2, k);
        fam.base.set(k, rw - rp, fam.base.at(k).s);
    }
    return fam;
}

}  // namespace detail

inline CandidateFamily candidate_family(const Pairing& whole, const Pairing& part,
                                        const Limits& lim = default_limits()) {
    CandidateFamily fam = detail::candidate_family_2adic(whole, part);
    if (!fam.failed &&
        static_cast<int>(fam.free_indices.size()) > lim.candidate_free_indices)
        throw resource_error("candidate_tables: " + std::to_string(fam.free_indices.size()) +
                             " free indices exceed bound " +
                             std::to_string(lim.candidate_free_indices));
    return fam;
}

/// Lazy deterministic enumeration of the 9^t assignments: values ordered
/// 0..7 then inf, the largest free index cycling fastest. Optional pruning
/// skips finite assignments whose parity already violates condition (2).
class CandidateStream {
 public:
    explicit CandidateStream(CandidateFamily fam, bool prune_parity = false)
        : fam_(std::move(fam)), prune_(prune_parity) {
        counters_.assign(fam_.free_indices.size(), 0);
        if (fam_.failed) done_ = true;
        if (prune_) {
            for (int m : fam_.free_indices) {
                long long suffix = 0;
                for (auto& [k, e] : fam_.base.entries())
                    if (k >= m + 1) suffix += e.r;
                parity_.push_back(static_cast<int>(mod_pos(suffix, 2)));
            }
        }
    }

    const CandidateFamily& family() const { return fam_; }

    std::optional<Table> next() {
        while (!done_) {
            bool ok = true;
            if (prune_) {
                for (std::size_t i = 0; i < counters_.size() && ok; ++i)
                    if (counters_[i] < 8 && mod_pos(counters_[i] - parity_[i], 2) != 0) ok = false;
            }
            std::optional<Table> out;
            if (ok) {
                Table t = fam_.base;
                for (std::size_t i = 0; i < counters_.size(); ++i) {
                    int m = fam_.free_indices[i];
                    Z8Bar s = counters_[i] < 8 ? Z8Bar(counters_[i]) : Z8Bar::inf();
                    t.set(m, t.at(m).r, s);
                }
                out = std::move(t);
            }
            advance();
            if (out) return out;
        }
        return std::nullopt;
    }

 private:
    void advance() {
        if (counters_.empty()) {
            done_ = true;
            return;
        }
        std::size_t i = counters_.size();
        while (i-- > 0) {
            if (++counters_[i] < 9) return;
            counters_[i] = 0;
            if (i == 0) done_ = true;
        }
    }

    CandidateFamily fam_;
    bool prune_;
    std::vector<long long> counters_;
    std::vector<int> parity_;
    bool done_ = false;
};

namespace detail {

/// Odd-prime summand criterion: for every level, strict rank inequality or
/// equality of both rank and sign. Returns the complement generators, or
/// nothing.
inline std::optional<std::vector<GenOdd>> odd_complement(const Pairing& whole,
                                                         const Pairing& part, long long p) {
    int maxk = std::max(max_level(whole, p), max_level(part, p));
    std::vector<GenOdd> gens;
    for (int k = 1; k <= maxk; ++k) {
        long long rw = rho(whole, p, k), rp = rho(part, p, k);
        int sw = sigma_odd(whole, p, k), sp = sigma_odd(part, p, k);
        if (rp > rw) return std::nullopt;
        if (rp == rw && sw != sp) return std::nullopt;
        long long r = rw - rp;
        if (r == 0) continue;
        int s = sw * sp;  // complement sign
        for (long long i = 0; i + 1 < r; ++i) gens.push_back(GenOdd{p, k, 1});
        gens.push_back(GenOdd{p, k, s});
    }
    return gens;
}

}  // namespace detail

/// Decide whether part is an orthogonal summand of whole; on success return
/// an explicit complement. Primes are handled independently: odd primes by
/// the direct rank/sign criterion, p = 2 by scanning the candidate family
/// for an admissible table and realizing it.
inline std::optional<Pairing> orthogonal_summand(const Pairing& part, const Pairing& whole,
                                                 const Limits& lim = default_limits()) {
    Pairing witness;
    std::set<long long> odd_primes;
    for (long long p : primes_of(part))
        if (p != 2) odd_primes.insert(p);
    for (long long p : primes_of(whole))
        if (p != 2) odd_primes.insert(p);
    for (long long p : odd_primes) {
        auto comp = detail::odd_complement(whole, part, p);
        if (!comp) return std::nullopt;
        for (auto& g : *comp) witness.odd[p].push_back(g);
    }

    CandidateStream stream(candidate_family(whole, part, lim), /*prune_parity=*/true);
    if (stream.family().failed) return std::nullopt;
    bool found = false;
    while (auto t = stream.next()) {
        if (!check_admissible(*t).verdict) continue;
        witness.two = realize(*t).two;
        found = true;
        break;
    }
    if (!found) return std::nullopt;

    canonicalize(witness);
    if (!is_isomorphic(whole, oplus(part, witness)))
        throw unreachable_state("orthogonal_summand: witness fails to reassemble the whole");
    return witness;
}

/// Quadratic refinement of the summand test. Index 0 is never free (gamma
/// never vanishes); the odd complement is fixed by its pairing, so its
/// Gauss argument is subtracted from the index-0 difference.
inline std::optional<QuadraticForm> quadratic_summand(const QuadraticForm& part,
                                                      const QuadraticForm& whole,
                                                      const Limits& lim = default_limits()) {
    QuadraticForm witness;
    Pairing uw = underlying_pairing(whole), up = underlying_pairing(part);
    std::set<long long> odd_primes;
    for (long long p : primes_of(uw))
        if (p != 2) odd_primes.insert(p);
    for (long long p : primes_of(up))
        if (p != 2) odd_primes.insert(p);
    for (long long p : odd_primes) {
        auto comp = detail::odd_complement(uw, up, p);
        if (!comp) return std::nullopt;
        for (auto& g : *comp) witness.odd[p].push_back(g);
    }

    CandidateFamily fam = candidate_family(uw, up, lim);
    if (fam.failed) return std::nullopt;
    // rebase onto the quadratic flavor with the forced index-0 entry
    Table base = Table::quadratic();
    for (auto& [k, e] : fam.base.entries()) base.set(k, e.r, e.s);
    base.set(0, 0, Z8Bar(mod_pos(sigma0_two(whole) - sigma0_two(part), 8)));
    fam.base = std::move(base);

    CandidateStream stream(std::move(fam), /*prune_parity=*/true);
    bool found = false;
    while (auto t = stream.next()) {
        if (!check_admissible(*t).verdict) continue;
        witness.two = realize_quadratic(*t).two;
        found = true;
        break;
    }
    if (!found) return std::nullopt;

    canonicalize(witness);
    if (!is_isomorphic(whole, oplus(part, witness)))
        throw unreachable_state("quadratic_summand: witness fails to reassemble the whole");
    return witness;
}

}  // namespace linkforms
