#include "doctest.h"

#include "json.hpp"
#include "lexseg/analyze.hpp"
#include "lexseg/parse.hpp"

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

TEST_CASE("full report for a complete linear segment") {
    const AmbientContext ctx{3, 3};
    AnalysisOptions opts;
    opts.check_oracle = true;
    opts.with_resolution = true;
    const auto rep = analyze(ctx, m("x1*x2*x3", 3), m("x2*x3^2", 3), opts);

    CHECK(rep.completely);
    CHECK(rep.linear.linear);
    CHECK(rep.linear.which == LinearCase::complete_c);
    CHECK(rep.depth_result.depth == 0);
    CHECK(rep.dim == 1);
    CHECK(rep.projdim == 3);
    CHECK_FALSE(rep.cm.cohen_macaulay);

    CHECK_FALSE(rep.order.split);
    CHECK(names(rep.order.gens) ==
          std::vector<std::string>{"x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"});
    CHECK(rep.order.quotients.linear);
    CHECK(rep.regularity_defined);
    CHECK(rep.regularity.regular);

    CHECK(rep.betti_route == "sets");
    CHECK(rep.betti.beta(0, 0) == 1);
    CHECK(rep.betti.beta(1, 3) == 5);
    CHECK(rep.betti.beta(2, 4) == 5);
    CHECK(rep.betti.beta(3, 5) == 1);

    REQUIRE(rep.oracle_agreement.has_value());
    CHECK(*rep.oracle_agreement);
    CHECK(rep.oracle_notes.empty());

    CHECK(rep.resolution_attached);
    CHECK(rep.resolution_verified);
    CHECK(rep.resolution.rank(1) == 5);
    CHECK(rep.resolution.rank(3) == 1);
}

TEST_CASE("non-complete segment gets the two-block order and no resolution") {
    const AmbientContext ctx{6, 4};
    AnalysisOptions opts;
    opts.with_resolution = true;
    const auto rep = analyze(ctx, m("x1*x3^2*x5", 6), m("x2*x6^3", 6), opts);

    CHECK_FALSE(rep.completely);
    CHECK(rep.linear.linear);
    CHECK(rep.linear.which == LinearCase::noncomplete_split);
    CHECK(rep.order.split);
    CHECK(rep.order.quotients.linear);
    CHECK(rep.betti_route == "sets");
    CHECK_FALSE(rep.resolution_attached);
    CHECK_FALSE(rep.oracle_agreement.has_value());
}

TEST_CASE("segment without linear resolution falls back to the oracle table") {
    const AmbientContext ctx{4, 3};
    AnalysisOptions opts;
    opts.check_oracle = true;
    const auto rep = analyze(ctx, m("x1*x4^2", 4), m("x2*x3^2", 4), opts);

    CHECK_FALSE(rep.linear.linear);
    CHECK(rep.linear.which == LinearCase::none);
    CHECK_FALSE(rep.order.quotients.linear);
    CHECK(rep.order.quotients.first_failure > 0);
    CHECK_FALSE(rep.regularity_defined);
    CHECK(rep.betti_route == "oracle");
    CHECK_FALSE(rep.betti.concentrated_linear(3));
    CHECK(rep.betti == koszul_betti(rep.order.gens, 4));
    REQUIRE(rep.oracle_agreement.has_value());
    CHECK(*rep.oracle_agreement);
}

TEST_CASE("report json is deterministic and carries the schema") {
    const AmbientContext ctx{4, 3};
    AnalysisOptions opts;
    opts.check_oracle = true;
    opts.with_resolution = true;
    const auto rep = analyze(ctx, m("x1*x3^2", 4), m("x2*x4^2", 4), opts);
    const std::string text = report_json(rep);
    CHECK(text == report_json(rep));
    CHECK(text.back() == '\n');

    const auto j = nlohmann::json::parse(text);
    CHECK(j["n"] == 4);
    CHECK(j["d"] == 3);
    CHECK(j["u"] == "x1*x3^2");
    CHECK(j["v"] == "x2*x4^2");
    CHECK(j["completely"] == true);
    CHECK(j["linear_resolution"] == true);
    CHECK(j["split_order"] == true);
    CHECK(j["linear_quotients"] == true);
    CHECK(j["order"][0] == "x2^3");
    CHECK(j["order"][8] == "x1*x3^2");
    CHECK(j["regular_decomposition"] == false);
    CHECK(j["regularity_witness"]["gen"] == "x1*x4^2");
    CHECK(j["regularity_witness"]["s"] == 2);
    CHECK(j["depth"] == 1);
    CHECK(j["dim"] == 2);
    CHECK(j["projdim"] == 3);
    CHECK(j["cohen_macaulay"] == false);
    CHECK(j["betti_route"] == "sets");
    CHECK(j["oracle_agreement"] == true);
    CHECK(j["resolution"]["verified"] == true);
    CHECK(j["resolution"]["ranks"] == nlohmann::json::array({9, 13, 5}));
    CHECK(j["resolution"]["twists"][0][0] == -3);
    for (const char* key :
         {"case", "first_failure", "sets", "depth_case", "cm_case", "betti", "oracle_notes"})
        CHECK(j.contains(key));
}

TEST_CASE("resolution json lists matrices and verification") {
    const AmbientContext ctx{3, 3};
    const auto order = prec_order(ctx, m("x1*x2*x3", 3), m("x2*x3^2", 3));
    const auto res = build_resolution_from_order(3, order);
    const auto verify = verify_resolution(res, order);
    const IntPoly hilb = hilbert_numerator(res);
    const std::string text = resolution_json(res, &verify, &hilb);
    CHECK(text == resolution_json(res, &verify, &hilb));

    const auto j = nlohmann::json::parse(text);
    CHECK(j["n"] == 3);
    CHECK(j["construction"] == "mapping_cone");
    CHECK(j["length"] == 3);
    CHECK(j["ranks"] == nlohmann::json::array({5, 5, 1}));
    REQUIRE(j["differentials"].is_array());
    CHECK(j["differentials"].size() == 3);
    CHECK(j["differentials"][0]["rows"] == 1);
    CHECK(j["differentials"][0]["cols"] == 5);
    CHECK(j["differentials"][0]["entries"][0][2] == 1);
    CHECK(j["basis"][2][0]["sigma"] == nlohmann::json::array({2, 3}));
    CHECK(j["verify"]["ok"] == true);
    CHECK(j["hilbert_numerator"] == hilb.str());

    const auto sets_only = betti_from_sets(3, order);
    const auto j2 = nlohmann::json::parse(resolution_json(sets_only, nullptr, nullptr));
    CHECK(j2["differentials"].is_null());
    CHECK_FALSE(j2.contains("verify"));
    CHECK_FALSE(j2.contains("hilbert_numerator"));
}
