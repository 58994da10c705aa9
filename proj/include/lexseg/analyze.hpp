#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexseg/classify.hpp"
#include "lexseg/oracle.hpp"
#include "lexseg/quotients.hpp"
#include "lexseg/resolution.hpp"

namespace lexseg {

struct AnalysisOptions {
    bool check_oracle = false;    // recompute everything with the brute-force oracle
    bool with_resolution = false; // attach a resolution summary when one can be built
    int shadow_extra = 2;         // extra shadow degrees for the completeness scan
};

struct AnalysisReport {
    AmbientContext ctx;
    Monomial u;
    Monomial v;
    bool completely = false;
    LinearResolutionResult linear;
    DepthResult depth_result;
    int dim = 0;
    int projdim = 0;
    CmResult cm;
    OrderedGenerators order;
    bool regularity_defined = false; // only meaningful with linear quotients
    RegularityCheck regularity;
    BettiTable betti;
    std::string betti_route; // "sets", "oracle", or "none" when past oracle caps
    std::optional<bool> oracle_agreement;
    std::vector<std::string> oracle_notes; // human-readable mismatch descriptions
    bool resolution_attached = false;
    GradedResolution resolution;
    bool resolution_verified = false;
};

AnalysisReport analyze(const AmbientContext& ctx, const Monomial& u, const Monomial& v,
                       const AnalysisOptions& opts = {});

// Key-sorted JSON with a stable schema; identical inputs and options yield
// byte-identical output.
std::string report_json(const AnalysisReport& rep);

// Shared JSON helpers for the command-line surface.
std::string resolution_json(const GradedResolution& res, const VerifyReport* verify,
                            const IntPoly* hilbert);

} // namespace lexseg
