#include "doctest.h"

#include <algorithm>

#include "lexseg/lexsegment.hpp"
#include "lexseg/parse.hpp"

using namespace lexseg;

namespace {

Monomial m(const char* text, int n) { return parse_monomial(text, n); }

} // namespace

TEST_CASE("monomials_of_degree is the full lex-descending list") {
    const auto all = monomials_of_degree(3, 3);
    REQUIRE(all.size() == 10); // C(3+3-1, 3)
    CHECK(all.front() == m("x1^3", 3));
    CHECK(all.back() == m("x3^3", 3));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); }));
    CHECK(monomials_of_degree(1, 5).size() == 1);
    CHECK(monomials_of_degree(4, 2).size() == 10);
}

TEST_CASE("next_lex_smaller walks the degree-d list") {
    const auto all = monomials_of_degree(4, 3);
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        const auto next = next_lex_smaller(all[i]);
        REQUIRE(next.has_value());
        CHECK(*next == all[i + 1]);
    }
    CHECK_FALSE(next_lex_smaller(all.back()).has_value());
}

TEST_CASE("lex_predecessor steps down within the degree") {
    const AmbientContext ctx{3, 3};
    const auto z = lex_predecessor(ctx, m("x2*x3^2", 3));
    REQUIRE(z.has_value());
    CHECK(*z == m("x3^3", 3));
    CHECK_FALSE(lex_predecessor(ctx, m("x3^3", 3)).has_value());
    CHECK(*lex_predecessor(ctx, m("x1^3", 3)) == m("x1^2*x2", 3));
    CHECK_THROWS_AS(lex_predecessor(ctx, m("x1^2", 3)), argument_error);
}

TEST_CASE("enumerate_lexsegment lists the closed lex interval") {
    const AmbientContext ctx{3, 3};
    const auto gens = enumerate_lexsegment(ctx, m("x1*x2*x3", 3), m("x2*x3^2", 3));
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == m("x1*x2*x3", 3));
    CHECK(gens[1] == m("x1*x3^2", 3));
    CHECK(gens[2] == m("x2^3", 3));
    CHECK(gens[3] == m("x2^2*x3", 3));
    CHECK(gens[4] == m("x2*x3^2", 3));
    CHECK(enumerate_lexsegment(ctx, m("x2^3", 3), m("x2^3", 3)).size() == 1);
    CHECK_THROWS_AS(enumerate_lexsegment(ctx, m("x2*x3^2", 3), m("x1*x2*x3", 3)),
                    argument_error);
}

TEST_CASE("initial and final segments are the interval endpoints") {
    const AmbientContext ctx{3, 2};
    CHECK(enumerate_lexsegment(ctx, m("x1^2", 3), m("x2*x3", 3)).size() == 5);
    CHECK(enumerate_lexsegment(ctx, m("x2^2", 3), m("x3^2", 3)).size() == 3);
}

TEST_CASE("shadow multiplies by every variable and dedupes") {
    const std::vector<Monomial> t = {m("x1*x2", 2)};
    const auto sh = shadow(t, 2);
    REQUIRE(sh.size() == 2);
    CHECK(sh[0] == m("x1^2*x2", 2));
    CHECK(sh[1] == m("x1*x2^2", 2));
}

TEST_CASE("is_lexsegment_set recognizes intervals only") {
    const AmbientContext ctx{3, 2};
    auto seg = enumerate_lexsegment(ctx, m("x1*x2", 3), m("x2^2", 3));
    CHECK(is_lexsegment_set(seg, 3));
    seg.erase(seg.begin() + 1); // poke a hole
    CHECK_FALSE(is_lexsegment_set(seg, 3));
    const std::vector<Monomial> none;
    CHECK_THROWS_AS(is_lexsegment_set(none, 3), argument_error);
    CHECK(shadow(none, 3).empty());
}

TEST_CASE("completeness of the running examples") {
    SUBCASE("L(x1x2x3, x2x3^2) is completely lexsegment") {
        const auto c = is_completely_lexsegment({3, 3}, m("x1*x2*x3", 3), m("x2*x3^2", 3));
        CHECK(c.complete);
        CHECK(c.shadows_checked == 2);
        CHECK(c.first_failure_degree == -1);
        CHECK_FALSE(c.missing.has_value());
    }
    SUBCASE("L(x1x3^2x5, x2x6^3) fails at the first shadow") {
        const auto c = is_completely_lexsegment({6, 4}, m("x1*x3^2*x5", 6), m("x2*x6^3", 6));
        CHECK_FALSE(c.complete);
        CHECK(c.first_failure_degree == 5);
        REQUIRE(c.missing.has_value());
        CHECK(*c.missing == m("x1*x3^4", 6));
    }
    SUBCASE("L(x2^2, x2x3) misses x1*x3^2 in its shadow") {
        const auto c = is_completely_lexsegment({3, 2}, m("x2^2", 3), m("x2*x3", 3));
        CHECK_FALSE(c.complete);
        CHECK(c.first_failure_degree == 3);
        REQUIRE(c.missing.has_value());
        CHECK(*c.missing == m("x1*x3^2", 3));
    }
    SUBCASE("L(x1x3^2, x2x4^2) is completely lexsegment") {
        const auto c = is_completely_lexsegment({4, 3}, m("x1*x3^2", 4), m("x2*x4^2", 4));
        CHECK(c.complete);
    }
    CHECK_THROWS_AS(is_completely_lexsegment({3, 2}, m("x2^2", 3), m("x2*x3", 3), 0),
                    argument_error);
}
