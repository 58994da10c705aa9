#include "lexseg/analyze.hpp"

#include "json.hpp"
#include "lexseg/parse.hpp"
#include "lexseg/poly.hpp"

namespace lexseg {

namespace {

std::string betti_diff(const BettiTable& a, const BettiTable& b) {
    for (const auto& [key, val] : a.entries)
        if (b.beta(key.first, key.second) != val)
            return "beta(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") " + std::to_string(val) + " vs " +
                   std::to_string(b.beta(key.first, key.second));
    for (const auto& [key, val] : b.entries)
        if (a.beta(key.first, key.second) != val)
            return "beta(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                   ") " + std::to_string(a.beta(key.first, key.second)) + " vs " +
                   std::to_string(val);
    return "";
}

} // namespace

AnalysisReport analyze(const AmbientContext& ctx, const Monomial& u, const Monomial& v,
                       const AnalysisOptions& opts) {
    AnalysisReport rep;
    rep.ctx = ctx;
    rep.u = u;
    rep.v = v;
    rep.completely = is_completely_lexsegment(ctx, u, v, opts.shadow_extra).complete;
    rep.linear = has_linear_resolution(ctx, u, v, opts.shadow_extra);
    rep.depth_result = depth(ctx, u, v);
    rep.dim = krull_dimension(ctx, u, v);
    rep.projdim = proj_dimension(ctx, u, v);
    rep.cm = is_cohen_macaulay(ctx, u, v);
    rep.order = quotient_order(ctx, u, v, opts.shadow_extra);

    if (rep.order.quotients.linear) {
        rep.regularity_defined = true;
        rep.regularity = is_regular_decomposition(rep.order.gens);
        rep.betti = betti_table(betti_from_sets(ctx.n, rep.order.gens));
        rep.betti_route = "sets";
    } else {
        try {
            rep.betti = koszul_betti(rep.order.gens, ctx.n);
            rep.betti_route = "oracle";
        } catch (const capacity_error&) {
            rep.betti_route = "none";
        }
    }

    if (opts.check_oracle) {
        const BettiTable oracle = koszul_betti(rep.order.gens, ctx.n);
        if (rep.betti_route == "sets") {
            const std::string diff = betti_diff(rep.betti, oracle);
            if (!diff.empty()) rep.oracle_notes.push_back("betti tables disagree: " + diff);
        }
        if (oracle.concentrated_linear(ctx.d) != rep.linear.linear)
            rep.oracle_notes.push_back("linear resolution flag disagrees with the Betti table");
        if (rep.order.quotients.linear != rep.linear.linear)
            rep.oracle_notes.push_back("linear quotients do not match the resolution criterion");
        const DepthDim dd = oracle_depth_dim(rep.order.gens, ctx.n);
        if (dd.depth != rep.depth_result.depth)
            rep.oracle_notes.push_back("depth " + std::to_string(rep.depth_result.depth) +
                                       " vs oracle " + std::to_string(dd.depth));
        if (dd.dim != rep.dim)
            rep.oracle_notes.push_back("dim " + std::to_string(rep.dim) + " vs oracle " +
                                       std::to_string(dd.dim));
        if (dd.projdim != rep.projdim)
            rep.oracle_notes.push_back("projdim " + std::to_string(rep.projdim) +
                                       " vs oracle " + std::to_string(dd.projdim));
        if (dd.cohen_macaulay != rep.cm.cohen_macaulay)
            rep.oracle_notes.push_back("cohen_macaulay flag disagrees with the oracle");
        rep.oracle_agreement = rep.oracle_notes.empty();
    }

    if (opts.with_resolution) {
        try {
            rep.resolution = build_resolution(ctx, u, v, opts.shadow_extra);
            rep.resolution_attached = true;
            rep.resolution_verified =
                verify_resolution(rep.resolution, rep.order.gens).ok();
        } catch (const unsupported_construction&) {
            rep.resolution_attached = false;
        }
    }
    return rep;
}

namespace {

using nlohmann::json;

json betti_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [key, val] : t.entries)
        if (val != 0) arr.push_back({key.first, key.second, val});
    return arr;
}

json resolution_summary_json(const GradedResolution& res) {
    json j;
    j["construction"] = res.construction;
    j["length"] = res.length();
    json ranks = json::array();
    json twists = json::array();
    for (int i = 1; i <= res.length(); ++i) {
        ranks.push_back(res.rank(i));
        json t = json::array();
        for (int deg : res.twists(i)) t.push_back(-deg);
        twists.push_back(t);
    }
    j["ranks"] = ranks;
    j["twists"] = twists;
    return j;
}

} // namespace

std::string report_json(const AnalysisReport& rep) {
    json j;
    j["n"] = rep.ctx.n;
    j["d"] = rep.ctx.d;
    j["u"] = print_monomial(rep.u);
    j["v"] = print_monomial(rep.v);
    j["completely"] = rep.completely;
    j["linear_resolution"] = rep.linear.linear;
    j["case"] = linear_case_name(rep.linear.which);
    json order = json::array();
    for (const Monomial& g : rep.order.gens) order.push_back(print_monomial(g));
    j["order"] = order;
    j["split_order"] = rep.order.split;
    j["linear_quotients"] = rep.order.quotients.linear;
    j["first_failure"] = rep.order.quotients.first_failure;
    if (rep.order.quotients.linear) {
        json sets = json::array();
        for (const std::vector<int>& s : rep.order.quotients.sets) sets.push_back(s);
        j["sets"] = sets;
    } else {
        j["sets"] = nullptr;
    }
    if (rep.regularity_defined) {
        j["regular_decomposition"] = rep.regularity.regular;
        if (!rep.regularity.regular)
            j["regularity_witness"] = {{"gen", print_monomial(rep.regularity.witness)},
                                       {"s", rep.regularity.s}};
        else
            j["regularity_witness"] = nullptr;
    } else {
        j["regular_decomposition"] = nullptr;
        j["regularity_witness"] = nullptr;
    }
    j["depth"] = rep.depth_result.depth;
    j["depth_case"] = depth_case_name(rep.depth_result.which);
    j["dim"] = rep.dim;
    j["projdim"] = rep.projdim;
    j["cohen_macaulay"] = rep.cm.cohen_macaulay;
    j["cm_case"] = cm_case_name(rep.cm.which);
    j["betti"] = (rep.betti_route == "none") ? json(nullptr) : betti_json(rep.betti);
    j["betti_route"] = rep.betti_route;
    if (rep.oracle_agreement.has_value()) {
        j["oracle_agreement"] = *rep.oracle_agreement;
        j["oracle_notes"] = rep.oracle_notes;
    }
    j["resolution"] = rep.resolution_attached
                          ? [&] {
                                json r = resolution_summary_json(rep.resolution);
                                r["verified"] = rep.resolution_verified;
                                return r;
                            }()
                          : json(nullptr);
    return j.dump(2) + "\n";
}

std::string resolution_json(const GradedResolution& res, const VerifyReport* verify,
                            const IntPoly* hilbert) {
    json j = resolution_summary_json(res);
    j["n"] = res.n;
    json basis = json::array();
    for (const auto& level : res.basis) {
        json lvl = json::array();
        for (const BasisSymbol& sym : level)
            lvl.push_back({{"gen", print_monomial(sym.gen)}, {"sigma", sym.sigma}});
        basis.push_back(lvl);
    }
    j["basis"] = basis;
    if (res.has_matrices) {
        json diffs = json::array();
        for (const DifferentialMatrix& m : res.diff) {
            json mat;
            mat["rows"] = m.rows;
            mat["cols"] = m.cols;
            json entries = json::array();
            for (const MatrixEntry& e : m.entries)
                entries.push_back({e.row, e.col, e.sign, print_monomial(e.mono)});
            mat["entries"] = entries;
            diffs.push_back(mat);
        }
        j["differentials"] = diffs;
    } else {
        j["differentials"] = nullptr;
    }
    if (verify != nullptr) {
        json v;
        v["composes_to_zero"] = verify->composes_to_zero;
        v["minimal"] = verify->minimal;
        v["exact"] = verify->exact;
        v["cokernel_matches"] = verify->cokernel_matches;
        v["ok"] = verify->ok();
        v["detail"] = verify->detail;
        j["verify"] = v;
    }
    if (hilbert != nullptr) j["hilbert_numerator"] = hilbert->str();
    return j.dump(2) + "\n";
}

} // namespace lexseg
