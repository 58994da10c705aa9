#include <cstdlib>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexseg/analyze.hpp"
#include "lexseg/errors.hpp"
#include "lexseg/lexsegment.hpp"
#include "lexseg/parse.hpp"
#include "lexseg/resolution.hpp"
#include "lexseg/sweep.hpp"

namespace {

using lexseg::Monomial;
using nlohmann::json;

// exit codes: 0 ok, 2 usage, 3 verification mismatch, 4 unsupported construction
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;
constexpr int kUnsupported = 4;

int env_workers() {
    const char* w = std::getenv("LEXSEG_WORKERS");
    if (w == nullptr) return 1;
    const int v = std::atoi(w);
    return v >= 1 ? v : 1;
}

std::string iso_now() {
    char buf[32];
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// payload stays timestamp-free unless --meta asks for it
std::string with_meta(const std::string& payload, bool meta) {
    if (!meta) return payload;
    json j = json::parse(payload);
    j["meta"] = {{"tool", "lexseg"}, {"version", "1.0.0"}, {"generated_at", iso_now()}};
    return j.dump(2) + "\n";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct AnalyzeArgs {
    int n = 0, d = 0;
    std::string u, v;
    bool check_oracle = false;
    bool resolution = false;
    bool meta = false;
};

int run_analyze(const AnalyzeArgs& a) {
    const lexseg::AmbientContext ctx{a.n, a.d};
    const Monomial u = lexseg::parse_monomial(a.u, a.n);
    const Monomial v = lexseg::parse_monomial(a.v, a.n);
    lexseg::AnalysisOptions opts;
    opts.check_oracle = a.check_oracle;
    opts.with_resolution = a.resolution;
    const lexseg::AnalysisReport rep = lexseg::analyze(ctx, u, v, opts);
    std::cout << with_meta(lexseg::report_json(rep), a.meta);
    if (rep.oracle_agreement.has_value() && !*rep.oracle_agreement) {
        for (const std::string& note : rep.oracle_notes)
            std::cerr << "mismatch: " << note << "\n";
        return kMismatch;
    }
    return kOk;
}

struct ResolveArgs {
    int n = 0, d = 0;
    std::string u, v;
    std::string gens;
    bool verify = false;
    bool meta = false;
};

int run_resolve(const ResolveArgs& a) {
    lexseg::GradedResolution res;
    std::vector<Monomial> gens;
    if (!a.gens.empty()) {
        for (const std::string& tok : split_list(a.gens))
            gens.push_back(lexseg::parse_monomial(tok, a.n));
        const lexseg::LinearQuotients lq = lexseg::has_linear_quotients(gens);
        if (!lq.linear)
            throw lexseg::unsupported_construction(
                "the given order does not have linear quotients (position " +
                std::to_string(lq.first_failure) + ")");
        res = lexseg::build_resolution_from_order(a.n, gens);
    } else {
        if (a.u.empty() || a.v.empty())
            throw lexseg::argument_error("need --u and --v, or --gens");
        const lexseg::AmbientContext ctx{a.n, a.d};
        const Monomial u = lexseg::parse_monomial(a.u, a.n);
        const Monomial v = lexseg::parse_monomial(a.v, a.n);
        res = lexseg::build_resolution(ctx, u, v);
        for (const lexseg::BasisSymbol& sym : res.basis[0]) gens.push_back(sym.gen);
    }
    const lexseg::IntPoly hil = lexseg::hilbert_numerator(res);
    if (!a.verify) {
        std::cout << with_meta(lexseg::resolution_json(res, nullptr, &hil), a.meta);
        return kOk;
    }
    const lexseg::VerifyReport rep = lexseg::verify_resolution(res, gens);
    const bool hilbert_matches = (hil == lexseg::k_polynomial_counting(gens, res.n));
    json j = json::parse(lexseg::resolution_json(res, &rep, &hil));
    j["verify"]["hilbert_matches"] = hilbert_matches;
    std::cout << with_meta(j.dump(2) + "\n", a.meta);
    if (!rep.ok() || !hilbert_matches) {
        std::cerr << "verification failed"
                  << (rep.detail.empty() ? "" : ": " + rep.detail) << "\n";
        return kMismatch;
    }
    return kOk;
}

struct SweepArgs {
    lexseg::SweepConfig cfg;
    bool no_resolutions = false;
    bool meta = false;
};

int run_sweep_cmd(const SweepArgs& a) {
    lexseg::SweepConfig cfg = a.cfg;
    cfg.check_resolutions = !a.no_resolutions;
    const lexseg::SweepSummary summary = lexseg::run_sweep(cfg);
    std::cout << with_meta(lexseg::summary_json(cfg, summary), a.meta);
    if (!summary.ok()) {
        const lexseg::Mismatch& m = summary.mismatches.front();
        std::cerr << "mismatch (" << m.what << "); reproduce with:\n"
                  << "  lexseg analyze --check-oracle --n " << m.n << " --d " << m.d
                  << " --u '" << m.u << "' --v '" << m.v << "'\n";
        return kMismatch;
    }
    return kOk;
}

struct EnumerateArgs {
    int n = 0, d = 0;
    std::string u, v;
    bool as_json = false;
};

int run_enumerate(const EnumerateArgs& a) {
    const lexseg::AmbientContext ctx{a.n, a.d};
    std::vector<Monomial> list;
    if (!a.u.empty() || !a.v.empty()) {
        if (a.u.empty() || a.v.empty())
            throw lexseg::argument_error("--u and --v go together");
        list = lexseg::enumerate_lexsegment(ctx, lexseg::parse_monomial(a.u, a.n),
                                            lexseg::parse_monomial(a.v, a.n));
    } else {
        list = lexseg::monomials_of_degree(a.n, a.d);
    }
    if (a.as_json) {
        json arr = json::array();
        for (const Monomial& m : list) arr.push_back(lexseg::print_monomial(m));
        json j;
        j["count"] = list.size();
        j["monomials"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Monomial& m : list) std::cout << lexseg::print_monomial(m) << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexsegment ideal toolkit: classification, linear quotients, "
                 "mapping-cone resolutions, and an exhaustive verification sweep"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "classify one segment and report everything as JSON");
    analyze->add_option("--n", an.n, "number of variables")->required();
    analyze->add_option("--d", an.d, "generator degree")->required();
    analyze->add_option("--u", an.u, "upper end, e.g. 'x1*x2^2' or '[1,2,0]'")->required();
    analyze->add_option("--v", an.v, "lower end")->required();
    analyze->add_flag("--check-oracle", an.check_oracle,
                      "recompute with the homology oracle; exit 3 on disagreement");
    analyze->add_flag("--resolution", an.resolution, "attach a resolution summary");
    analyze->add_flag("--meta", an.meta, "include tool metadata and a timestamp");

    ResolveArgs re;
    CLI::App* resolve = app.add_subcommand(
        "resolve", "build the mapping-cone resolution and print its matrices");
    resolve->add_option("--n", re.n, "number of variables")->required();
    resolve->add_option("--d", re.d, "generator degree (with --u/--v)");
    resolve->add_option("--u", re.u, "upper end");
    resolve->add_option("--v", re.v, "lower end");
    resolve->add_option("--gens", re.gens, "explicit comma-separated generator order");
    resolve->add_flag("--verify", re.verify, "check the result exactly; exit 3 on failure");
    resolve->add_flag("--meta", re.meta, "include tool metadata and a timestamp");

    SweepArgs sw;
    sw.cfg.workers = env_workers();
    CLI::App* sweep = app.add_subcommand(
        "sweep", "exhaustively cross-check formulas against oracles; exit 3 on any mismatch");
    sweep->add_option("--max-n", sw.cfg.max_n, "largest number of variables")->required();
    sweep->add_option("--max-d", sw.cfg.max_d, "largest generator degree")->required();
    sweep->add_option("--min-n", sw.cfg.min_n, "smallest number of variables (default 1)");
    sweep->add_option("--min-d", sw.cfg.min_d, "smallest generator degree (default 2)");
    sweep->add_option("--workers", sw.cfg.workers,
                      "worker threads (default LEXSEG_WORKERS or 1)");
    sweep->add_flag("--no-resolutions", sw.no_resolutions,
                    "skip the per-multidegree resolution verification");
    sweep->add_flag("--meta", sw.meta, "include tool metadata and a timestamp");

    EnumerateArgs en;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list a degree's monomials or one segment, lex-descending");
    enumerate->add_option("--n", en.n, "number of variables")->required();
    enumerate->add_option("--d", en.d, "degree")->required();
    enumerate->add_option("--u", en.u, "upper end (with --v)");
    enumerate->add_option("--v", en.v, "lower end (with --u)");
    enumerate->add_flag("--json", en.as_json, "emit a JSON array instead of lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return run_analyze(an);
        if (*resolve) return run_resolve(re);
        if (*sweep) return run_sweep_cmd(sw);
        if (*enumerate) return run_enumerate(en);
    } catch (const lexseg::unsupported_construction& ex) {
        std::cerr << "unsupported construction: " << ex.what() << "\n";
        return kUnsupported;
    } catch (const lexseg::state_error& ex) {
        std::cerr << "verification error: " << ex.what() << "\n";
        return kMismatch;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
