#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "support/generators.hpp"

using namespace linkforms;

TEST_CASE("oplus is multiset union per prime") {
    Pairing a = make_pairing({cyclic2(3, 1)});
    Pairing b = make_pairing({e0(2)});
    Pairing sum = oplus(a, b);
    CHECK(sum == make_pairing({cyclic2(3, 1), e0(2)}));
    CHECK(oplus(a, Pairing{}) == a);
    CHECK(oplus(a, a).two.size() == 2);
    CHECK(oplus(a, b) == oplus(b, a));
    Pairing c = make_pairing({}, {odd_gen(3, 1, 1)});
    CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
}

TEST_CASE("rho counts level ranks") {
    Pairing x = make_pairing({cyclic2(3, 1), e0(3)});
    CHECK(rho(x, 2, 3) == 3);
    CHECK(rho(make_pairing({cyclic2(3, 1)}), 2, 4) == 0);
    Pairing y = make_pairing({}, {odd_gen(3, 2, 1), odd_gen(3, 2, 2)});
    CHECK(rho(y, 3, 2) == 2);
}

TEST_CASE("sigma2 closed-form values") {
    CHECK(sigma2(make_pairing({cyclic2(4, 3)}), 3) == Z8Bar(7));
    CHECK(sigma2(make_pairing({e1(3)}), 2) == Z8Bar(4));
    CHECK(sigma2(make_pairing({cyclic2(3, 1), cyclic2(3, 1)}), 3).is_inf());
    CHECK(sigma2(make_pairing({cyclic2(2, 1)}), 1) == Z8Bar(1));
    CHECK(sigma2(make_pairing({cyclic2(5, 5)}), 1) == Z8Bar(5));
    CHECK(sigma2(make_pairing({e0(4)}), 1) == Z8Bar(0));
    CHECK(sigma2(make_pairing({e1(4)}), 2) == Z8Bar(0));
    CHECK(sigma2(make_pairing({cyclic2(2, 3)}), 4) == Z8Bar(0));
}

TEST_CASE("sigma2(A^2(1),1) agrees with a direct Gauss sum over Z/4") {
    // sum over x mod 4 of exp(i pi 2 x^2 / 4) = 2 + 2i, argument pi/4
    double re = 0, im = 0;
    for (int x = 0; x < 4; ++x) {
        re += std::cos(M_PI * (x * x) / 2.0);
        im += std::sin(M_PI * (x * x) / 2.0);
    }
    CHECK(re == Catch::Approx(2.0));
    CHECK(im == Catch::Approx(2.0));
    CHECK(sigma2(make_pairing({cyclic2(2, 1)}), 1) == Z8Bar(1));
}

TEST_CASE("sigma_odd multiplies residue classes") {
    CHECK(sigma_odd(make_pairing({}, {odd_gen(3, 1, 2)}), 3, 1) == -1);
    CHECK(sigma_odd(make_pairing({}, {odd_gen(3, 1, 2), odd_gen(3, 1, 2)}), 3, 1) == 1);
    CHECK(sigma_odd(Pairing{}, 5, 2) == 1);
}

TEST_CASE("rho and sigma are homomorphisms for oplus") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        Pairing x = testsupport::random_pairing(rng, 8);
        Pairing y = testsupport::random_pairing(rng, 8);
        Pairing s = oplus(x, y);
        for (int k = 1; k <= 6; ++k) {
            CHECK(rho(s, 2, k) == rho(x, 2, k) + rho(y, 2, k));
            CHECK(sigma2(s, k) == sigma2(x, k) + sigma2(y, k));
            for (long long p : {3LL, 5LL, 7LL})
                CHECK(sigma_odd(s, p, k) == sigma_odd(x, p, k) * sigma_odd(y, p, k));
        }
    }
}

TEST_CASE("homogeneous pairings satisfy the mod-2 parity identity") {
    // for a pairing supported at a single level l and any k < l:
    // sigma_k reduces mod 2 to rho_l
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> level_d(2, 5);
        int l = level_d(rng);
        auto types = testsupport::all_gen2_at_level(l);
        std::uniform_int_distribution<int> count_d(1, 4);
        std::uniform_int_distribution<std::size_t> pick_d(0, types.size() - 1);
        std::vector<Gen2> gens;
        int n = count_d(rng);
        for (int i = 0; i < n; ++i) gens.push_back(types[pick_d(rng)]);
        Pairing x = make_pairing(gens);
        for (int k = 1; k < l; ++k) {
            Z8Bar s = sigma2(x, k);
            REQUIRE_FALSE(s.is_inf());
            CHECK(mod_pos(s.value() - rho(x, 2, l), 2) == 0);
        }
    }
}

TEST_CASE("underlying_pairing drops refinement data") {
    CHECK(underlying_pairing(make_quadratic({qcyclic(1, 3)})) == make_pairing({cyclic2(1, 1)}));
    CHECK(underlying_pairing(make_quadratic({qe1(2, 1, 0)})) == make_pairing({e1(2)}));
    CHECK(underlying_pairing(QuadraticForm{}) == Pairing{});
}
