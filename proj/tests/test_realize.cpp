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

TEST_CASE("realize base cases") {
    CHECK(realize(two_table({{3, 2, Z8Bar(0)}})) == make_pairing({e0(3)}));
    CHECK(realize(two_table({{1, 0, Z8Bar(1)}, {2, 0, Z8Bar(1)}, {4, 1, Z8Bar::inf()},
                             {3, 0, Z8Bar(1)}})) == make_pairing({cyclic2(4, 1)}));
    Pairing r =
        realize(two_table({{1, 0, Z8Bar(1)}, {2, 0, Z8Bar(1)}, {3, 1, Z8Bar::inf()}}));
    CHECK(is_isomorphic(r, make_pairing({cyclic2(3, 1)})));
    CHECK(realize(Table::two()) == Pairing{});
}

TEST_CASE("realize odd flavor") {
    Table t = Table::odd(5);
    t.set(2, 3, sign_to_z8(-1));
    Pairing r = realize(t);
    CHECK(r == make_pairing({}, {odd_gen(5, 2, 1), odd_gen(5, 2, 1), odd_gen(5, 2, 2)}));
    Table bad = Table::odd(5);
    bad.set(1, 0, sign_to_z8(-1));
    CHECK_THROWS_AS(realize(bad), inadmissible_error);
}

TEST_CASE("realize rejects inadmissible tables with the report attached") {
    Table bad = two_table({{3, 1, Z8Bar::inf()}});
    try {
        realize(bad);
        FAIL("expected inadmissible_error");
    } catch (const inadmissible_error& e) {
        CHECK_FALSE(e.report.verdict);
        CHECK_FALSE(e.report.violations.empty());
    }
}

TEST_CASE("realize round-trips invariant tables of random pairings") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 400; ++trial) {
        Pairing x = testsupport::random_two_pairing(rng, 10);
        Table t = invariant_table(x, 2);
        Pairing r = realize(t);
        CHECK(invariant_table(r, 2) == t);
    }
}

TEST_CASE("realize agrees with the Gauss oracle") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 25; ++trial) {
        Pairing x = testsupport::random_two_pairing(rng, 8);
        Table t = invariant_table(x, 2);
        Pairing r = realize(t);
        CHECK(gram_invariant_table(gram_of(r), 2) == t);
    }
}

TEST_CASE("realize is additive up to isomorphism") {
    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 150; ++trial) {
        Table t1 = invariant_table(testsupport::random_two_pairing(rng, 8), 2);
        Table t2 = invariant_table(testsupport::random_two_pairing(rng, 8), 2);
        CHECK(is_isomorphic(realize(table_sum(t1, t2)), oplus(realize(t1), realize(t2))));
    }
}

TEST_CASE("realize emits no invalid generators") {
    std::mt19937_64 rng(14142);
    for (int trial = 0; trial < 200; ++trial) {
        Pairing x = testsupport::random_two_pairing(rng, 10);
        Pairing r = realize(invariant_table(x, 2));
        for (const Gen2& g : r.two) {
            CHECK(normalize(g) == g);
            if (g.kind == Gen2Kind::E1) CHECK(g.level >= 2);
        }
    }
}

TEST_CASE("realize_quadratic basic examples") {
    Table t = Table::quadratic();
    t.set(0, 0, Z8Bar(1));
    t.set(1, 1, Z8Bar::inf());
    CHECK(realize_quadratic(t) == make_quadratic({qcyclic(1, 1)}));

    Table t2 = Table::quadratic();
    t2.set(0, 0, Z8Bar(7));
    t2.set(1, 1, Z8Bar::inf());
    CHECK(realize_quadratic(t2) == make_quadratic({qcyclic(1, 3)}));

    Table t3 = Table::quadratic();
    t3.set(1, 2, Z8Bar(0));
    CHECK(realize_quadratic(t3) == make_quadratic({qe0(1, 0, 0)}));
}

TEST_CASE("realize_quadratic round-trips random quadratic tables") {
    std::mt19937_64 rng(6674);
    for (int trial = 0; trial < 250; ++trial) {
        QuadraticForm q = testsupport::random_quadratic(rng, 8, 4, /*with_odd=*/false);
        Table t = quad_invariant_table(q);
        QuadraticForm r = realize_quadratic(t);
        CHECK(quad_invariant_table(r) == t);
    }
}
