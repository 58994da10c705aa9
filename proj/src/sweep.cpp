#include "lexseg/sweep.hpp"

#include <algorithm>

#include "json.hpp"
#include "lexseg/classify.hpp"
#include "lexseg/lexsegment.hpp"
#include "lexseg/oracle.hpp"
#include "lexseg/parse.hpp"
#include "lexseg/quotients.hpp"
#include "lexseg/resolution.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexseg {

void SweepSummary::absorb(const SweepSummary& other) {
    instances += other.instances;
    completely += other.completely;
    linear += other.linear;
    regular += other.regular;
    kpoly_subset_checks += other.kpoly_subset_checks;
    resolutions_built += other.resolutions_built;
    resolutions_verified += other.resolutions_verified;
    for (const auto& [k, v] : other.linear_cases) linear_cases[k] += v;
    for (const auto& [k, v] : other.depth_cases) depth_cases[k] += v;
    for (const auto& [k, v] : other.cm_cases) cm_cases[k] += v;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

namespace {

constexpr int kSubsetRouteCap = 22;

} // namespace

SweepSummary check_instance(const AmbientContext& ctx, const Monomial& u,
                            const Monomial& v, const SweepConfig& cfg) {
    SweepSummary s;
    s.instances = 1;
    const auto add = [&](const std::string& what) {
        s.mismatches.push_back({ctx.n, ctx.d, print_monomial(u), print_monomial(v), what});
    };
    try {
        const bool complete = is_completely_lexsegment(ctx, u, v, cfg.shadow_extra).complete;
        const LinearResolutionResult lr = has_linear_resolution(ctx, u, v, cfg.shadow_extra);
        const OrderedGenerators og = quotient_order(ctx, u, v, cfg.shadow_extra);
        const std::vector<Monomial>& gens = og.gens;

        s.completely = complete ? 1 : 0;
        s.linear = lr.linear ? 1 : 0;
        s.linear_cases[linear_case_name(lr.which)] = 1;
        const DepthResult dep = depth(ctx, u, v);
        const int dim = krull_dimension(ctx, u, v);
        const int pd = proj_dimension(ctx, u, v);
        const CmResult cm = is_cohen_macaulay(ctx, u, v);
        s.depth_cases[depth_case_name(dep.which)] = 1;
        s.cm_cases[cm_case_name(cm.which)] = 1;

        const BettiTable betti = koszul_betti(gens, ctx.n);

        // linear resolution criterion vs homology concentration
        if (betti.concentrated_linear(ctx.d) != lr.linear)
            add("linear resolution criterion disagrees with the Betti table");
        // linear resolution iff the constructed order has linear quotients
        if (og.quotients.linear != lr.linear)
            add(std::string("quotient order ") +
                (og.quotients.linear ? "has" : "lacks") +
                " linear quotients against the criterion (failure position " +
                std::to_string(og.quotients.first_failure) + ")");

        // closed-form depth/dim/projdim/CM vs ranks and minimal primes
        const DepthDim dd = oracle_depth_dim(betti, gens, ctx.n);
        if (dep.depth != dd.depth)
            add("depth " + std::to_string(dep.depth) + " vs oracle " + std::to_string(dd.depth));
        if (dim != dd.dim)
            add("dim " + std::to_string(dim) + " vs oracle " + std::to_string(dd.dim));
        if (pd != dd.projdim)
            add("projdim " + std::to_string(pd) + " vs oracle " + std::to_string(dd.projdim));
        if (cm.cohen_macaulay != dd.cohen_macaulay)
            add("cohen_macaulay flag disagrees with the oracle");

        // Euler characteristic: alternating Betti sum equals the K-polynomial
        const IntPoly kpoly = k_polynomial_counting(gens, ctx.n);
        if (betti.alternating_sum() != kpoly)
            add("alternating Betti sum differs from the K-polynomial");
        if (gens.size() <= kSubsetRouteCap) {
            s.kpoly_subset_checks = 1;
            if (k_polynomial(gens, ctx.n) != kpoly)
                add("K-polynomial subset route differs from the counting route");
        }

        // 1 never lies in a set(w) of the precedence order: x1 w stays
        // outside the prefix ideal
        const std::vector<Monomial> prec = prec_order(ctx, u, v);
        for (size_t j = 0; j < prec.size(); ++j) {
            const Monomial x1w = product(prec[j], variable(ctx.n, 1));
            for (size_t i = 0; i < j; ++i)
                if (divides(prec[i], x1w)) {
                    add("x1 * " + print_monomial(prec[j]) + " lies in the prefix ideal");
                    break;
                }
        }

        const bool cone_applicable = lr.linear && (u == v || lr.reduced_complete);

        if (og.quotients.linear) {
            s.regular = is_regular_decomposition(gens).regular ? 1 : 0;
            if (betti_table(betti_from_sets(ctx.n, gens)) != betti)
                add("Betti numbers from the quotient sets differ from the homology ranks");
        }

        if (cone_applicable) {
            const LinearQuotients lqp = has_linear_quotients(prec);
            if (!lqp.linear) {
                add("precedence order lacks linear quotients on a complete linear segment");
            } else {
                // decomposition function: definition scan vs oracle, and vs the
                // closed form when no reduction happened
                const bool standard = nu1(u) >= 1 && nu1(v) == 0;
                bool g_bad = false;
                for (size_t j = 0; j < prec.size() && !g_bad; ++j)
                    for (const int sv : lqp.sets[j]) {
                        const Monomial m = product(prec[j], variable(ctx.n, sv));
                        const Monomial& g_scan = decomposition_g(prec, m);
                        if (g_scan != oracle_g(prec, m) ||
                            (standard && g_scan != g_formula(ctx, u, v, prec[j], sv))) {
                            add("decomposition of x" + std::to_string(sv) + " * " +
                                print_monomial(prec[j]) + " differs between routes");
                            g_bad = true;
                            break;
                        }
                    }
                if (!is_regular_decomposition(prec).regular)
                    add("decomposition is not regular for the precedence order");
                if (cfg.check_resolutions) {
                    const GradedResolution res = build_resolution_from_order(ctx.n, prec);
                    s.resolutions_built = 1;
                    const VerifyReport rep = verify_resolution(res, prec);
                    if (rep.ok())
                        s.resolutions_verified = 1;
                    else
                        add("resolution verification failed: " + rep.detail);
                    if (hilbert_numerator(res) != kpoly)
                        add("resolution Hilbert numerator differs from the K-polynomial");
                    if (betti_table(res) != betti)
                        add("resolution Betti numbers differ from the homology ranks");
                }
            }
        }
    } catch (const std::exception& ex) {
        add(std::string("exception: ") + ex.what());
    }
    return s;
}

namespace {

struct Instance {
    AmbientContext ctx;
    Monomial u;
    Monomial v;
};

std::vector<Instance> enumerate_instances(const SweepConfig& cfg) {
    std::vector<Instance> items;
    for (int n = std::max(1, cfg.min_n); n <= cfg.max_n; ++n)
        for (int d = std::max(2, cfg.min_d); d <= cfg.max_d; ++d) {
            const AmbientContext ctx{n, d};
            const std::vector<Monomial> all = monomials_of_degree(n, d);
            for (size_t i = 0; i < all.size(); ++i)
                for (size_t j = i; j < all.size(); ++j)
                    items.push_back({ctx, all[i], all[j]});
        }
    return items;
}

} // namespace

SweepSummary run_sweep_serial(const SweepConfig& cfg) {
    SweepSummary total;
    const std::vector<Instance> items = enumerate_instances(cfg);
    for (const Instance& it : items)
        total.absorb(check_instance(it.ctx, it.u, it.v, cfg));
    return total;
}

SweepSummary run_sweep_parallel(const SweepConfig& cfg) {
    const std::vector<Instance> items = enumerate_instances(cfg);
    std::vector<SweepSummary> results(items.size());
    const int workers = std::max(1, cfg.workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
        const Instance& it = items[static_cast<size_t>(i)];
        results[static_cast<size_t>(i)] = check_instance(it.ctx, it.u, it.v, cfg);
    }
    SweepSummary total;
    for (const SweepSummary& r : results) total.absorb(r);
    return total;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    return cfg.workers > 1 ? run_sweep_parallel(cfg) : run_sweep_serial(cfg);
}

std::string summary_json(const SweepConfig& cfg, const SweepSummary& s) {
    using nlohmann::json;
    json j;
    j["config"] = {{"min_n", cfg.min_n},
                   {"max_n", cfg.max_n},
                   {"min_d", cfg.min_d},
                   {"max_d", cfg.max_d},
                   {"workers", cfg.workers},
                   {"check_resolutions", cfg.check_resolutions}};
    j["instances"] = s.instances;
    j["completely"] = s.completely;
    j["linear"] = s.linear;
    j["regular"] = s.regular;
    j["kpoly_subset_checks"] = s.kpoly_subset_checks;
    j["resolutions_built"] = s.resolutions_built;
    j["resolutions_verified"] = s.resolutions_verified;
    j["linear_cases"] = s.linear_cases;
    j["depth_cases"] = s.depth_cases;
    j["cm_cases"] = s.cm_cases;
    json mm = json::array();
    for (const Mismatch& m : s.mismatches)
        mm.push_back({{"n", m.n}, {"d", m.d}, {"u", m.u}, {"v", m.v}, {"what", m.what}});
    j["mismatches"] = mm;
    j["ok"] = s.ok();
    return j.dump(2) + "\n";
}

} // namespace lexseg
