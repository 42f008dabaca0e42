#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "support/generators.hpp"

using namespace linkforms;

namespace {

Table two_table(std::initializer_list<std::tuple<int, long long, Z8Bar>> rows) {
    Table t = Table::two();
    for (auto& [k, r, s] : rows) t.set(k, r, s);
    return t;
}

}  // namespace

TEST_CASE("invariant_table per-level values") {
    Pairing a31 = make_pairing({cyclic2(3, 1)});
    CHECK(invariant_table(a31, 2) ==
          two_table({{1, 0, Z8Bar(1)}, {2, 0, Z8Bar(1)}, {3, 1, Z8Bar::inf()}}));

    CHECK(invariant_table(make_pairing({e0(2)}), 2) == two_table({{2, 2, Z8Bar(0)}}));
    CHECK(invariant_table(Pairing{}, 7) == Table::odd(7));

    Table e13 = two_table({{2, 0, Z8Bar(4)}, {3, 2, Z8Bar(0)}});
    CHECK(invariant_table(make_pairing({e1(3)}), 2) == e13);
}

TEST_CASE("invariant_table of A^3(5): even-distance value, odd-distance sign") {
    // sigma_1 = 5 (distance 2), sigma_2 = (-1)^((5-1)/2) = +1 (distance 1)
    Table t = invariant_table(make_pairing({cyclic2(3, 5)}), 2);
    CHECK(t == two_table({{1, 0, Z8Bar(5)}, {2, 0, Z8Bar(1)}, {3, 1, Z8Bar::inf()}}));
}

TEST_CASE("is_isomorphic distinguishes residues and accepts relations") {
    CHECK_FALSE(is_isomorphic(make_pairing({cyclic2(2, 1)}), make_pairing({cyclic2(2, 3)})));
    CHECK(is_isomorphic(make_pairing({e1(2), e1(2)}), make_pairing({e0(2), e0(2)})));
    Pairing x = make_pairing({cyclic2(3, 5), e0(2)}, {odd_gen(3, 1, 2)});
    CHECK(is_isomorphic(x, x));
}

TEST_CASE("is_isomorphic is an equivalence and a congruence for oplus") {
    std::mt19937_64 rng(4242);
    std::vector<Pairing> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(testsupport::random_pairing(rng, 6));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        CHECK(is_isomorphic(pool[i], pool[i]));
        for (std::size_t j = 0; j < pool.size(); ++j) {
            bool ij = is_isomorphic(pool[i], pool[j]);
            CHECK(ij == is_isomorphic(pool[j], pool[i]));
            if (ij)
                for (std::size_t k = 0; k < 10; ++k) {
                    CHECK(is_isomorphic(oplus(pool[i], pool[k]), oplus(pool[j], pool[k])));
                    if (is_isomorphic(pool[j], pool[k]))
                        CHECK(is_isomorphic(pool[i], pool[k]));
                }
        }
    }
}

TEST_CASE("quad_invariant_table of the basic refinements") {
    Table t = quad_invariant_table(make_quadratic({qcyclic(1, 1)}));
    Table expect = Table::quadratic();
    expect.set(0, 0, Z8Bar(1));
    expect.set(1, 1, Z8Bar::inf());
    CHECK(t == expect);

    CHECK(quad_invariant_table(make_quadratic({qcyclic(1, 3)})).at(0).s == Z8Bar(7));
    CHECK(quad_invariant_table(make_quadratic({qe0(1, 0, 0)})).at(0).s == Z8Bar(0));
    CHECK(quad_invariant_table(make_quadratic({qe0(1, 1, 1)})).at(0).s == Z8Bar(4));
}

TEST_CASE("quadratic table restricted to indices >= 1 is the pairing table") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 200; ++trial) {
        QuadraticForm q = testsupport::random_quadratic(rng, 8);
        Table qt = quad_invariant_table(q);
        Table pt = invariant_table(underlying_pairing(q), 2);
        Table restricted = Table::two();
        for (auto& [k, e] : qt.entries())
            if (k >= 1) restricted.set(k, e.r, e.s);
        CHECK(restricted == pt);
        CHECK(qt.at(0).r == 0);
        CHECK_FALSE(qt.at(0).s.is_inf());
    }
}

TEST_CASE("gamma argument is additive over orthogonal sums") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        QuadraticForm a = testsupport::random_quadratic(rng, 6);
        QuadraticForm b = testsupport::random_quadratic(rng, 6);
        CHECK(sigma0_sum(oplus(a, b)) == mod_pos(sigma0_sum(a) + sigma0_sum(b), 8));
    }
}
