#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "support/generators.hpp"

using namespace linkforms;

namespace {

int residue_sign(long long r) { return mod_pos((r - 1) / 2, 2) == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("lens_pairing on prime powers and mixed orders") {
    CHECK(lens_pairing({8, 3}) == make_pairing({cyclic2(3, 3)}));
    CHECK(lens_pairing({3, 2}) == make_pairing({}, {odd_gen(3, 1, 2)}));
    CHECK_THROWS_AS(lens_pairing({12, 3}), precondition_error);

    // CRT splitting of 5/12: the 2-part generator 3*1 has self-linking
    // 9*5/12 = 3/4, the 3-part generator 4*1 has 16*5/12 = 2/3
    Pairing L125 = lens_pairing({12, 5});
    CHECK(L125 == make_pairing({cyclic2(2, 3)}, {odd_gen(3, 1, 2)}));
    GramPairing direct;
    direct.orders = {12};
    direct.gram = {{QZ(5, 12)}};
    CHECK(gram_invariant_table(direct, 2) == invariant_table(L125, 2));
    CHECK(gram_invariant_table(direct, 3) == invariant_table(L125, 3));
}

TEST_CASE("lens pairing class depends only on the square class of q") {
    std::mt19937_64 rng(11);
    std::vector<long long> ns = {5, 7, 8, 9, 16, 12, 15, 32, 27};
    for (long long n : ns)
        for (long long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            for (long long u = 1; u < n; ++u) {
                if (std::gcd(n, u) != 1) continue;
                CHECK(is_isomorphic(lens_pairing({n, q}),
                                    lens_pairing({n, mod_pos(q * u * u, n)})));
            }
        }
}

TEST_CASE("connected sums") {
    CHECK(connected_sum({{8, 1}, {16, 1}, {32, 1}}) ==
          make_pairing({cyclic2(3, 1), cyclic2(4, 1), cyclic2(5, 1)}));
    CHECK(connected_sum({}) == Pairing{});
    CHECK(connected_sum({{16, 1}, {16, 1}}) == make_pairing({cyclic2(4, 1), cyclic2(4, 1)}));
}

TEST_CASE("degree-one queries onto lens targets") {
    Pairing src = connected_sum({{8, 1}, {16, 1}, {32, 1}});
    // the pairing of L(16,1) is a literal summand, so the map exists
    auto w1 = degree_one_onto_lens(src, {16, 1});
    REQUIRE(w1);
    CHECK(is_isomorphic(*w1, make_pairing({cyclic2(3, 1), cyclic2(5, 1)})));
    CHECK(degree_one_onto_lens(src, {16, 3}));
    // the excluded class for (1,1,1) is r = 7
    CHECK_FALSE(degree_one_onto_lens(src, {16, 7}));

    Pairing doubled = oplus(lens_pairing({7, 1}), lens_pairing({7, 1}));
    auto w2 = degree_one_onto_lens(doubled, {7, 1});
    REQUIRE(w2);
    CHECK(is_isomorphic(*w2, lens_pairing({7, 1})));
}

TEST_CASE("a target occurring as a generator of the source always succeeds") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Pairing rest = testsupport::random_two_pairing(rng, 6, 4);
        std::uniform_int_distribution<int> k_d(1, 4);
        int k = k_d(rng);
        std::uniform_int_distribution<long long> a_d(0, ipow(2, std::min(k, 3)) / 2 - 1);
        long long a = 2 * a_d(rng) + 1;
        Pairing src = oplus(rest, make_pairing({cyclic2(k, a)}));
        CHECK(degree_one_onto_lens(src, {ipow(2, k), a}));
    }
}

TEST_CASE("proscribed-residue law on the full residue grid") {
    // For source L(8,r1) # L(16,r2) # L(32,r3) and target L(16,r), the map
    // exists iff D = s(r1) + r2 + s(r3) - r is in {0, +-2} mod 8; exactly
    // one residue class fails, namely r = s(r1) + r2 + s(r3) + 4.
    const long long units[4] = {1, 3, 5, 7};
    for (long long r1 : units)
        for (long long r2 : units)
            for (long long r3 : units) {
                Pairing src = connected_sum({{8, r1}, {16, r2}, {32, r3}});
                long long bad = mod_pos(residue_sign(r1) + r2 + residue_sign(r3) + 4, 8);
                int failures = 0;
                for (long long r : units) {
                    bool ok = degree_one_onto_lens(src, {16, r}).has_value();
                    long long d = mod_pos(residue_sign(r1) + r2 + residue_sign(r3) - r, 8);
                    bool expect = d == 0 || d == 2 || d == 6;
                    CHECK(ok == expect);
                    CHECK(ok == (r != bad));
                    if (!ok) ++failures;
                }
                CHECK(failures == 1);
            }
}

TEST_CASE("onto_all_lens residue classes per prime power") {
    // rank >= 2 at the right level settles odd prime powers
    Pairing two_copies = oplus(lens_pairing({9, 1}), lens_pairing({9, 1}));
    CHECK(onto_all_lens(two_copies, 9));
    CHECK_FALSE(onto_all_lens(lens_pairing({9, 1}), 9));

    CHECK_FALSE(onto_all_lens(connected_sum({{8, 1}, {16, 1}, {32, 1}}), 16));
    CHECK_THROWS_AS(onto_all_lens(Pairing{}, 12), precondition_error);

    // b = 2 member of the worked family: a L(16) # 2 L(32) # c L(64)
    Pairing fam = connected_sum({{16, 1}, {32, 1}, {32, 1}, {64, 1}});
    CHECK(onto_all_lens(fam, 32));
}

TEST_CASE("spin-refined queries") {
    QuadraticForm target = make_quadratic({qcyclic(1, 1)});
    QuadraticForm source = make_quadratic({qcyclic(1, 1), qe0(1, 0, 0)});
    CHECK(spin_degree_one(source, target));
    CHECK_FALSE(spin_degree_one(make_quadratic({qcyclic(1, 3)}), target));
    CHECK(spin_degree_one(target, target));
    CHECK_THROWS_AS(spin_degree_one(source, make_quadratic({qe0(1, 0, 0)})),
                    precondition_error);
    QuadraticForm mixed_target = make_quadratic({qcyclic(2, 1)}, {odd_gen(3, 1, 1)});
    QuadraticForm mixed_source =
        make_quadratic({qcyclic(2, 1), qe0(3, 0, 0)}, {odd_gen(3, 1, 1), odd_gen(5, 1, 2)});
    CHECK(spin_degree_one(mixed_source, mixed_target));
}
