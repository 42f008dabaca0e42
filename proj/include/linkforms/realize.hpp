#pragma once

#include <array>
#include <optional>

#include "linkforms/invariants.hpp"

namespace linkforms {

namespace detail {

inline int sign_of_residue(long long residue) {
    return mod_pos((residue - 1) / 2, 2) == 0 ? 1 : -1;
}

/// Correction moves available while matching the level-k signature. Every
/// move preserves all ranks and every signature at levels > k.
struct Move {
    enum Kind { FlipCyclic, Shift4Cyclic, SwapE } kind;
    std::size_t index;
    int delta;  // effect on sigma_k, mod 8
};

inline void apply_move(std::vector<Gen2>& gens, const Move& mv) {
    Gen2& g = gens[mv.index];
    switch (mv.kind) {
        case Move::FlipCyclic:
            g = cyclic2(g.level, g.residue + 2);
            break;
        case Move::Shift4Cyclic:
            g = cyclic2(g.level, g.residue + 4);
            break;
        case Move::SwapE:
            g = g.kind == Gen2Kind::E0 ? e1(g.level) : e0(g.level);
            break;
    }
}

/// Drive sigma_k of the partial sum onto the target value using the proof's
/// move set: a +-2 residue shift of a cyclic factor one level up, a +4
/// shift two levels up, an E0/E1 swap one level up, or a pair of those.
inline void correct_sigma(std::vector<Gen2>& gens, int k, int delta) {
    std::vector<Move> moves;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Gen2& g = gens[i];
        if (g.kind == Gen2Kind::Cyclic && g.level == k + 1)
            moves.push_back({Move::FlipCyclic, i,
                             static_cast<int>(mod_pos(-2 * sign_of_residue(g.residue), 8))});
        if (g.kind == Gen2Kind::Cyclic && g.level == k + 2)
            moves.push_back({Move::Shift4Cyclic, i, 4});
        if ((g.kind == Gen2Kind::E0 || g.kind == Gen2Kind::E1) && g.level == k + 1)
            moves.push_back({Move::SwapE, i, 4});
    }
    int target = static_cast<int>(mod_pos(delta, 8));
    for (const Move& mv : moves)
        if (mv.delta == target) {
            apply_move(gens, mv);
            return;
        }
    for (std::size_t a = 0; a < moves.size(); ++a)
        for (std::size_t b = a + 1; b < moves.size(); ++b) {
            if (moves[a].index == moves[b].index) continue;
            if (mod_pos(moves[a].delta + moves[b].delta, 8) != target) continue;
            apply_move(gens, moves[a]);
            apply_move(gens, moves[b]);
            return;
        }
    // three flips reach a +-2 defect when only same-sign cyclic factors are
    // on hand (the rank >= 3 configuration)
    for (std::size_t a = 0; a < moves.size(); ++a)
        for (std::size_t b = a + 1; b < moves.size(); ++b)
            for (std::size_t c = b + 1; c < moves.size(); ++c) {
                if (moves[a].index == moves[b].index || moves[a].index == moves[c].index ||
                    moves[b].index == moves[c].index)
                    continue;
                if (mod_pos(moves[a].delta + moves[b].delta + moves[c].delta, 8) != target)
                    continue;
                apply_move(gens, moves[a]);
                apply_move(gens, moves[b]);
                apply_move(gens, moves[c]);
                return;
            }
    throw unreachable_state("realize: signature defect " + std::to_string(mod_pos(delta, 8)) +
                            " at level " + std::to_string(k) +
                            " has no correction move; admissible table not realizable");
}

}  // namespace detail

/// Constructive inverse of invariant_table: build a pairing whose table is
/// exactly t. Descends through the support; non-regular levels get cyclic
/// blocks, regular levels get hyperbolic blocks plus a signature correction.
inline Pairing realize(const Table& t) {
    AdmissibilityReport rep = check_admissible(t);
    if (!rep.verdict) throw inadmissible_error(rep);

    if (t.flavor() == Flavor::Odd) {
        std::vector<GenOdd> gens;
        for (auto& [k, e] : t.entries()) {
            if (e.r == 0) continue;
            for (long long i = 0; i + 1 < e.r; ++i) gens.push_back(GenOdd{t.odd_prime(), k, 1});
            gens.push_back(GenOdd{t.odd_prime(), k, z8_to_sign(e.s)});
        }
        Pairing result = make_pairing({}, std::move(gens));
        if (!(invariant_table(result, t.odd_prime()) == t))
            throw unreachable_state("realize: odd table round-trip failed");
        return result;
    }
    if (t.flavor() != Flavor::Two) throw precondition_error("realize: flavor must be two or odd");

    std::vector<Gen2> gens;
    auto sigma_at = [&](int k) {
        Z8Bar s(0);
        for (const Gen2& g : gens) s += sigma2_contribution(g, k);
        return s;
    };

    for (int k = t.max_index(); k >= 1; --k) {
        TableEntry e = t.at(k);
        if (!t.regular(k)) {
            for (long long i = 0; i < e.r; ++i) gens.push_back(cyclic2(k, 1));
            continue;
        }
        for (long long i = 0; i < e.r / 2; ++i) gens.push_back(e0(k));
        Z8Bar cur = sigma_at(k);
        if (cur.is_inf())
            throw unreachable_state("realize: infinite signature at regular level");
        if (e.s.is_inf())
            throw unreachable_state("realize: admissible table with s = inf at regular level");
        int delta = mod_pos(e.s.value() - cur.value(), 8);
        if (delta != 0) detail::correct_sigma(gens, k, delta);
    }

    Pairing result = make_pairing(std::move(gens));
    if (!(invariant_table(result, 2) == t))
        throw unreachable_state("realize: table round-trip failed");
    return result;
}

/// Quadratic counterpart: realize the pairing part, lift each generator to
/// a refinement, then fix the index-0 signature by refinement choices that
/// leave the underlying table alone. Reachability over Z/8 is searched
/// breadth-first (a subset-sum sweep over the per-factor option sets), with
/// paired E0/E1 swaps as a fallback.
inline QuadraticForm realize_quadratic(const Table& t) {
    if (t.flavor() != Flavor::Quadratic)
        throw precondition_error("realize_quadratic: flavor must be quadratic");
    AdmissibilityReport rep = check_admissible(t);
    if (!rep.verdict) throw inadmissible_error(rep);

    Table t1 = Table::two();
    for (auto& [k, e] : t.entries())
        if (k >= 1) t1.set(k, e.r, e.s);
    Pairing base = realize(t1);
    int target = t.at(0).s.value();

    auto lift_options = [](const Gen2& g) {
        std::vector<QGen2> opts;
        switch (g.kind) {
            case Gen2Kind::Cyclic: {
                long long step = ipow(2, g.level);
                opts.push_back(qcyclic(g.level, g.residue));
                opts.push_back(qcyclic(g.level, g.residue + step));
                break;
            }
            case Gen2Kind::E0:
                for (int a = 0; a < 2; ++a)
                    for (int c = 0; c < 2; ++c) opts.push_back(qe0(g.level, a, c));
                break;
            case Gen2Kind::E1:
                for (int a = 0; a < 2; ++a)
                    for (int c = 0; c < 2; ++c) opts.push_back(qe1(g.level, a, c));
                break;
        }
        return opts;
    };

    auto assemble = [&](const std::vector<Gen2>& factors) -> std::optional<QuadraticForm> {
        std::vector<std::vector<QGen2>> options;
        for (const Gen2& g : factors) options.push_back(lift_options(g));
        std::size_t n = options.size();
        // reach[i][v]: value v attainable from the first i factors
        std::vector<std::array<bool, 8>> reach(n + 1);
        for (auto& row : reach) row.fill(false);
        reach[0][0] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (int v = 0; v < 8; ++v) {
                if (!reach[i][v]) continue;
                for (const QGen2& opt : options[i]) reach[i + 1][mod_pos(v + sigma0(opt), 8)] = true;
            }
        if (!reach[n][target]) return std::nullopt;
        std::vector<QGen2> picked(n);
        int v = target;
        for (std::size_t i = n; i-- > 0;) {
            for (const QGen2& opt : options[i]) {
                int prev = mod_pos(v - sigma0(opt), 8);
                if (reach[i][prev]) {
                    picked[i] = opt;
                    v = prev;
                    break;
                }
            }
        }
        return make_quadratic(std::move(picked));
    };

    std::optional<QuadraticForm> result = assemble(base.two);
    if (!result) {
        // paired swaps keep the invariant table but change the gamma options
        for (std::size_t a = 0; a < base.two.size() && !result; ++a)
            for (std::size_t b = a + 1; b < base.two.size() && !result; ++b) {
                Gen2 ga = base.two[a], gb = base.two[b];
                if (ga.kind == Gen2Kind::Cyclic || gb.kind == Gen2Kind::Cyclic) continue;
                if (ga.level != gb.level || ga.kind != gb.kind || ga.level < 2) continue;
                std::vector<Gen2> alt = base.two;
                alt[a] = ga.kind == Gen2Kind::E0 ? e1(ga.level) : e0(ga.level);
                alt[b] = gb.kind == Gen2Kind::E0 ? e1(gb.level) : e0(gb.level);
                result = assemble(alt);
            }
    }
    if (!result)
        throw unreachable_state(
            "realize_quadratic: refinement search exhausted; admissible table not realizable");
    if (!(quad_invariant_table(*result) == t))
        throw unreachable_state("realize_quadratic: table round-trip failed");
    return *result;
}

}  // namespace linkforms
