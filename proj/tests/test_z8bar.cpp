#include <catch2/catch_amalgamated.hpp>

#include "linkforms/z8bar.hpp"

using namespace linkforms;

namespace {

std::vector<Z8Bar> all_values() {
    std::vector<Z8Bar> v;
    for (int i = 0; i < 8; ++i) v.push_back(Z8Bar(i));
    v.push_back(Z8Bar::inf());
    return v;
}

}  // namespace

TEST_CASE("Z8Bar is a commutative monoid with absorbing inf") {
    auto vals = all_values();
    for (auto a : vals) {
        CHECK(a + Z8Bar(0) == a);
        CHECK(Z8Bar(0) + a == a);
        CHECK(a + Z8Bar::inf() == Z8Bar::inf());
        for (auto b : vals) {
            CHECK(a + b == b + a);
            for (auto c : vals) CHECK((a + b) + c == a + (b + c));
        }
    }
}

TEST_CASE("Z8Bar arithmetic wraps mod 8") {
    CHECK(Z8Bar(5) + Z8Bar(5) == Z8Bar(2));
    CHECK(Z8Bar(3) - Z8Bar(7) == Z8Bar(4));
    CHECK(Z8Bar(-1) == Z8Bar(7));
    CHECK((Z8Bar(2) - Z8Bar::inf()).is_inf());
}

TEST_CASE("sign encoding embeds {+1,-1} as {0,4}") {
    CHECK(sign_to_z8(1) == Z8Bar(0));
    CHECK(sign_to_z8(-1) == Z8Bar(4));
    CHECK(sign_to_z8(-1) + sign_to_z8(-1) == sign_to_z8(1));
    CHECK(z8_to_sign(Z8Bar(4)) == -1);
    CHECK_THROWS_AS(z8_to_sign(Z8Bar(3)), error);
}
