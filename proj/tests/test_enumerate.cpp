#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace linkforms;

namespace {

long long count_stream(PairingEnumerator e) {
    long long n = 0;
    while (e.next()) ++n;
    return n;
}

}  // namespace

TEST_CASE("enumerate_pairings yields exactly the nondegenerate matrices") {
    CHECK(count_stream(PairingEnumerator({2})) == 1);
    CHECK(count_stream(PairingEnumerator({3})) == 2);
    CHECK(count_stream(PairingEnumerator({4})) == 2);

    PairingEnumerator e({4});
    auto g1 = e.next();
    auto g2 = e.next();
    REQUIRE(g1);
    REQUIRE(g2);
    CHECK(g1->gram[0][0] == QZ(1, 4));
    CHECK(g2->gram[0][0] == QZ(3, 4));
    CHECK_FALSE(e.next());
}

TEST_CASE("enumerate_pairings respects the resource bound") {
    Limits lim;
    lim.enumerate_group_order = 8;
    CHECK_THROWS_AS(PairingEnumerator({16}, lim), resource_error);
}

TEST_CASE("brute_isomorphic on cyclic examples") {
    GramPairing a, b;
    a.orders = {3};
    a.gram = {{QZ(1, 3)}};
    b.orders = {3};
    b.gram = {{QZ(2, 3)}};
    CHECK(brute_isomorphic(a, a));
    CHECK_FALSE(brute_isomorphic(a, b));
}

TEST_CASE("brute_isomorphic confirms the E1+E1 = E0+E0 relation") {
    Pairing e1e1 = make_pairing({e1(2), e1(2)});
    Pairing e0e0 = make_pairing({e0(2), e0(2)});
    Limits lim;
    lim.iso_group_order = 1 << 9;
    CHECK(brute_isomorphic(gram_of(e1e1), gram_of(e0e0), lim));
    CHECK(is_isomorphic(e1e1, e0e0));
}

TEST_CASE("brute_isomorphic distinguishes forms with distinct invariants") {
    Pairing x = make_pairing({cyclic2(2, 1), cyclic2(2, 1)});
    Pairing y = make_pairing({e0(2)});
    CHECK_FALSE(brute_isomorphic(gram_of(x), gram_of(y)));
    CHECK_FALSE(is_isomorphic(x, y));
}

TEST_CASE("brute_isomorphic enforces its group-order bound") {
    Pairing big = make_pairing({cyclic2(7, 1)});
    CHECK_THROWS_AS(brute_isomorphic(gram_of(big), gram_of(big)), resource_error);
}
