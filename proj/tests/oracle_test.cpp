#include "doctest.h"

#include "lexseg/oracle.hpp"
#include "lexseg/parse.hpp"

using namespace lexseg;

namespace {

Monomial m(const char* text, int n) { return parse_monomial(text, n); }

std::vector<Monomial> example13() {
    return {m("x2^3", 3), m("x2^2*x3", 3), m("x2*x3^2", 3), m("x1*x2*x3", 3),
            m("x1*x3^2", 3)};
}

} // namespace

TEST_CASE("taylor betti numbers of the squared maximal ideal in two variables") {
    const std::vector<Monomial> gens = {m("x1^2", 2), m("x1*x2", 2), m("x2^2", 2)};
    const auto bt = taylor_betti(gens, 2);
    CHECK(bt.beta(0, 0) == 1);
    CHECK(bt.beta(1, 2) == 3);
    CHECK(bt.beta(2, 3) == 2);
    CHECK(bt.total(1) == 3);
    CHECK(bt.proj_dim() == 2);
    CHECK(bt.concentrated_linear(2));
}

TEST_CASE("koszul and taylor tables agree on the running example") {
    const auto gens = example13();
    const auto kz = koszul_betti(gens, 3);
    CHECK(kz == taylor_betti(gens, 3));
    CHECK(kz.beta(0, 0) == 1);
    CHECK(kz.beta(1, 3) == 5);
    CHECK(kz.beta(2, 4) == 5);
    CHECK(kz.beta(3, 5) == 1);
    CHECK(kz.proj_dim() == 3);
    CHECK(kz.concentrated_linear(3));
}

TEST_CASE("a non-linear segment spreads its betti numbers") {
    const std::vector<Monomial> gens = {m("x1*x4^2", 4), m("x2^3", 4), m("x2^2*x3", 4),
                                        m("x2^2*x4", 4), m("x2*x3^2", 4)};
    const auto bt = koszul_betti(gens, 4);
    CHECK(bt.beta(1, 3) == 5);
    CHECK(bt.beta(2, 4) == 4);
    CHECK(bt.beta(2, 5) == 1);
    CHECK(bt.beta(2, 6) == 1);
    CHECK(bt.beta(3, 5) == 1);
    CHECK(bt.beta(3, 7) == 1);
    CHECK_FALSE(bt.concentrated_linear(3));
    CHECK(bt == taylor_betti(gens, 4));
}

TEST_CASE("taylor cap raises a capacity error") {
    std::vector<Monomial> gens;
    for (int k = 0; k <= 4; ++k) {
        Monomial g{std::vector<int>(2, 0)};
        g.e[0] = 4 - k;
        g.e[1] = k;
        gens.push_back(std::move(g));
    }
    CHECK_THROWS_AS(taylor_betti(gens, 2, 4), capacity_error);
    CHECK_THROWS_AS(k_polynomial(gens, 2, 4), capacity_error);
    CHECK_NOTHROW(koszul_betti(gens, 2));
}

TEST_CASE("minimal primes are the minimal support transversals") {
    SUBCASE("single generator") {
        const std::vector<Monomial> gens = {m("x1*x2", 2)};
        const auto primes = minimal_primes(gens, 2);
        REQUIRE(primes.size() == 2);
        CHECK(primes[0] == std::vector<int>{1});
        CHECK(primes[1] == std::vector<int>{2});
    }
    SUBCASE("running example") {
        const auto primes = minimal_primes(example13(), 3);
        REQUIRE(primes.size() == 2);
        CHECK(primes[0] == std::vector<int>{1, 2});
        CHECK(primes[1] == std::vector<int>{2, 3});
    }
    SUBCASE("height checks the dimension") {
        const std::vector<Monomial> gens = {m("x1*x2^2", 4), m("x3^2*x4", 4)};
        const auto primes = minimal_primes(gens, 4);
        REQUIRE(!primes.empty());
        CHECK(primes.front().size() == 2); // e.g. {x1, x3}
    }
}

TEST_CASE("k-polynomial routes agree") {
    const std::vector<Monomial> path = {m("x1*x2", 3), m("x2*x3", 3)};
    const IntPoly expect{{1, 0, -2, 1}}; // 1 - 2t^2 + t^3
    CHECK(k_polynomial(path, 3) == expect);
    CHECK(k_polynomial_counting(path, 3) == expect);

    const auto gens = example13();
    const IntPoly kp = k_polynomial(gens, 3);
    CHECK(kp == k_polynomial_counting(gens, 3));
    CHECK(kp == IntPoly{{1, 0, 0, -5, 5, -1}}); // 1 - 5t^3 + 5t^4 - t^5
    CHECK(koszul_betti(gens, 3).alternating_sum() == kp);
}

TEST_CASE("depth dim oracle on the running examples") {
    SUBCASE("depth zero example") {
        const auto dd = oracle_depth_dim(example13(), 3);
        CHECK(dd.depth == 0);
        CHECK(dd.dim == 1);
        CHECK(dd.projdim == 3);
        CHECK_FALSE(dd.cohen_macaulay);
    }
    SUBCASE("two-block example keeps depth one") {
        const std::vector<Monomial> gens = {m("x2^3", 4), m("x2^2*x3", 4), m("x2^2*x4", 4),
                                            m("x2*x3^2", 4), m("x2*x3*x4", 4), m("x2*x4^2", 4),
                                            m("x1*x4^2", 4), m("x1*x3*x4", 4), m("x1*x3^2", 4)};
        const auto dd = oracle_depth_dim(gens, 4);
        CHECK(dd.depth == 1);
        CHECK(dd.dim == 2);
        CHECK(dd.projdim == 3);
        CHECK_FALSE(dd.cohen_macaulay);
    }
    SUBCASE("reused betti table gives the same answer") {
        const auto gens = example13();
        const auto dd = oracle_depth_dim(koszul_betti(gens, 3), gens, 3);
        CHECK(dd.depth == 0);
        CHECK(dd.projdim == 3);
    }
}

TEST_CASE("oracle colon matches the direct computation") {
    const auto gens = example13();
    const auto colon = oracle_colon(std::span<const Monomial>(gens).first(3), gens[3]);
    REQUIRE(colon.size() == 2);
    CHECK(colon[0] == m("x2", 3));
    CHECK(colon[1] == m("x3", 3));
    CHECK(oracle_colon({}, gens[0]).empty());
}

TEST_CASE("oracle decomposition takes the earliest containing prefix") {
    const auto gens = example13();
    CHECK(oracle_g(gens, m("x2^4", 3)) == m("x2^3", 3));
    CHECK(oracle_g(gens, m("x1*x2*x3^2", 3)) == m("x2*x3^2", 3));
    CHECK_THROWS_AS(oracle_g(gens, m("x1^3", 3)), argument_error);
}
