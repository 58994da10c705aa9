#include "doctest.h"

#include <algorithm>

#include "lexseg/parse.hpp"
#include "lexseg/quotients.hpp"

using namespace lexseg;

namespace {

Monomial m(const char* text, int n) { return parse_monomial(text, n); }

std::vector<std::string> names(const std::vector<Monomial>& gens) {
    std::vector<std::string> out;
    out.reserve(gens.size());
    for (const Monomial& g : gens) out.push_back(print_monomial(g));
    return out;
}

} // namespace

TEST_CASE("colon_generators minimalizes and sorts") {
    const std::vector<Monomial> prefix = {m("x1*x2*x3", 3), m("x1*x3^2", 3)};
    const auto colon = colon_generators(prefix, m("x2^3", 3));
    REQUIRE(colon.size() == 1);
    CHECK(colon[0] == m("x1*x3", 3));
    CHECK(colon_generators({}, m("x2^3", 3)).empty());
}

TEST_CASE("linear quotients along the precedence order of L(x1x2x3, x2x3^2)") {
    const std::vector<Monomial> order = {m("x2^3", 3), m("x2^2*x3", 3), m("x2*x3^2", 3),
                                         m("x1*x2*x3", 3), m("x1*x3^2", 3)};
    const auto lq = has_linear_quotients(order);
    CHECK(lq.linear);
    CHECK(lq.first_failure == 0);
    REQUIRE(lq.sets.size() == 5);
    CHECK(lq.sets[0].empty());
    CHECK(lq.sets[1] == std::vector<int>{2});
    CHECK(lq.sets[2] == std::vector<int>{2});
    CHECK(lq.sets[3] == std::vector<int>{2, 3});
    CHECK(lq.sets[4] == std::vector<int>{2});
}

TEST_CASE("descending lex order fails at position 3 with colon x1x3") {
    const std::vector<Monomial> order = {m("x1*x2*x3", 3), m("x1*x3^2", 3), m("x2^3", 3),
                                         m("x2^2*x3", 3), m("x2*x3^2", 3)};
    const auto lq = has_linear_quotients(order);
    CHECK_FALSE(lq.linear);
    CHECK(lq.first_failure == 3);
    REQUIRE(lq.colon_gens[2].size() == 1);
    CHECK(lq.colon_gens[2][0] == m("x1*x3", 3));
    CHECK(lq.sets[2].empty());
}

TEST_CASE("quotient_order picks the precedence order off the split shape") {
    const auto og = quotient_order({3, 3}, m("x1*x2*x3", 3), m("x2*x3^2", 3));
    CHECK_FALSE(og.split);
    CHECK(og.guaranteed);
    CHECK(og.quotients.linear);
    CHECK(names(og.gens) ==
          std::vector<std::string>{"x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"});
}

TEST_CASE("quotient_order uses the two-block order on the split shape") {
    const auto og = quotient_order({4, 3}, m("x1*x3^2", 4), m("x2*x4^2", 4));
    CHECK(og.split);
    CHECK(og.guaranteed);
    CHECK(og.quotients.linear);
    CHECK(names(og.gens) ==
          std::vector<std::string>{"x2^3", "x2^2*x3", "x2^2*x4", "x2*x3^2", "x2*x3*x4",
                                   "x2*x4^2", "x1*x4^2", "x1*x3*x4", "x1*x3^2"});
}

TEST_CASE("the six-variable split instance has linear quotients only split") {
    const AmbientContext ctx{6, 4};
    const Monomial u = m("x1*x3^2*x5", 6), v = m("x2*x6^3", 6);
    const auto og = quotient_order(ctx, u, v);
    CHECK(og.split);
    CHECK(og.guaranteed);
    CHECK(og.quotients.linear);
    REQUIRE(og.gens.size() == 53);

    const auto prec = prec_order(ctx, u, v);
    const auto lq = has_linear_quotients(prec);
    CHECK_FALSE(lq.linear);
    CHECK(lq.first_failure == 38);
    CHECK(prec[37] == m("x1*x3*x4^2", 6));
    const auto& colon = lq.colon_gens[37];
    const auto non_variable = std::find_if(colon.begin(), colon.end(),
                                           [](const Monomial& g) { return g.degree() > 1; });
    CHECK(non_variable != colon.end());
}

TEST_CASE("prec_order sorts through the reduced segment") {
    // L(x2^2, x2x3) reduces to the two variables of k[x1, x2]
    const auto prec = prec_order({3, 2}, m("x2^2", 3), m("x2*x3", 3));
    CHECK(names(prec) == std::vector<std::string>{"x2*x3", "x2^2"});
    CHECK(has_linear_quotients(prec).linear);
    // standard position keeps the plain x1-exponent order
    const auto direct = prec_order({3, 3}, m("x1*x2*x3", 3), m("x2*x3^2", 3));
    CHECK(std::is_sorted(direct.begin(), direct.end(),
                         [](const Monomial& a, const Monomial& b) { return prec_cmp(a, b) < 0; }));
}

TEST_CASE("quotient_order on a segment without linear resolution") {
    const auto og = quotient_order({4, 3}, m("x1*x4^2", 4), m("x2*x3^2", 4));
    CHECK_FALSE(og.guaranteed);
    CHECK_FALSE(og.quotients.linear);
    CHECK(og.quotients.first_failure > 0);
}

TEST_CASE("set_of mirrors the linear quotients sets") {
    const std::vector<Monomial> order = {m("x2^3", 3), m("x2^2*x3", 3), m("x2*x3^2", 3),
                                         m("x1*x2*x3", 3), m("x1*x3^2", 3)};
    CHECK(set_of(order, 1).empty());
    CHECK(set_of(order, 4) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(set_of(order, 0), argument_error);
    CHECK_THROWS_AS(set_of(order, 6), argument_error);
    const std::vector<Monomial> lex = {m("x1*x2*x3", 3), m("x1*x3^2", 3), m("x2^3", 3),
                                       m("x2^2*x3", 3), m("x2*x3^2", 3)};
    CHECK_THROWS_AS(set_of(lex, 4), state_error);
}

TEST_CASE("decomposition_g scans for the earliest divisor") {
    const std::vector<Monomial> order = {m("x2^3", 4), m("x2^2*x3", 4), m("x2^2*x4", 4),
                                         m("x2*x3^2", 4), m("x2*x3*x4", 4), m("x2*x4^2", 4),
                                         m("x1*x4^2", 4), m("x1*x3*x4", 4), m("x1*x3^2", 4)};
    CHECK(decomposition_g(order, m("x1*x2*x4^2", 4)) == m("x2*x4^2", 4));
    CHECK(decomposition_g(order, m("x2^3*x3", 4)) == m("x2^3", 4));
    CHECK_THROWS_AS(decomposition_g(order, m("x1^2*x2^2", 4)), argument_error);
}

TEST_CASE("closed-form decomposition on the completely lexsegment example") {
    const AmbientContext ctx{3, 3};
    const Monomial u = m("x1*x2*x3", 3), v = m("x2*x3^2", 3);
    // x2 * x1x2x3 stays lex-at-least x1*v: divide by x1
    CHECK(g_formula(ctx, u, v, m("x1*x2*x3", 3), 2) == m("x2^2*x3", 3));
    // x3 * x1x2x3 = x1*v exactly: still the x1 branch
    CHECK(g_formula(ctx, u, v, m("x1*x2*x3", 3), 3) == m("x2*x3^2", 3));
    CHECK(g_formula(ctx, u, v, m("x2^2*x3", 3), 2) == m("x2^3", 3));
    CHECK_THROWS_AS(g_formula(ctx, u, v, m("x2^3", 3), 1), argument_error);
    CHECK_THROWS_AS(g_formula(ctx, u, v, m("x1^3", 3), 2), argument_error);
}

TEST_CASE("regular decomposition holds for the precedence order") {
    const std::vector<Monomial> order = {m("x2^3", 3), m("x2^2*x3", 3), m("x2*x3^2", 3),
                                         m("x1*x2*x3", 3), m("x1*x3^2", 3)};
    const auto reg = is_regular_decomposition(order);
    CHECK(reg.regular);
    CHECK(reg.position == 0);
}

TEST_CASE("regularity fails for the two-block order of L(x1x3^2, x2x4^2)") {
    const auto og = quotient_order({4, 3}, m("x1*x3^2", 4), m("x2*x4^2", 4));
    const auto reg = is_regular_decomposition(og.gens);
    CHECK_FALSE(reg.regular);
    CHECK(reg.position == 7);
    CHECK(reg.s == 2);
    CHECK(reg.witness == m("x1*x4^2", 4));
    // the witness: set(x1x4^2) = {2} but set(g(x2 * x1x4^2)) = set(x2x4^2) = {2,3}
    CHECK(og.quotients.sets[6] == std::vector<int>{2});
    CHECK(decomposition_g(og.gens, m("x1*x2*x4^2", 4)) == m("x2*x4^2", 4));
    CHECK(og.quotients.sets[5] == std::vector<int>{2, 3});
}

TEST_CASE("regularity check requires linear quotients") {
    const std::vector<Monomial> lex = {m("x1*x2*x3", 3), m("x1*x3^2", 3), m("x2^3", 3),
                                       m("x2^2*x3", 3), m("x2*x3^2", 3)};
    CHECK_THROWS_AS(is_regular_decomposition(lex), state_error);
}
