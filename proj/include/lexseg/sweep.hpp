#pragma once

#include <map>
#include <string>
#include <vector>

#include "lexseg/monomial.hpp"

namespace lexseg {

struct SweepConfig {
    int min_n = 1;
    int max_n = 4;
    int min_d = 2;
    int max_d = 3;
    int workers = 1;               // > 1 shards instances across OpenMP threads
    bool check_resolutions = true; // full per-multidegree resolution verification
    int shadow_extra = 2;

    bool operator==(const SweepConfig&) const = default;
};

// One verification failure, reported as flags that reproduce it.
struct Mismatch {
    int n = 0;
    int d = 0;
    std::string u;
    std::string v;
    std::string what;

    bool operator==(const Mismatch&) const = default;
};

struct SweepSummary {
    long long instances = 0;
    long long completely = 0;
    long long linear = 0;
    long long regular = 0;             // regular decomposition function
    long long kpoly_subset_checks = 0; // subset-expansion route within cap
    long long resolutions_built = 0;
    long long resolutions_verified = 0;
    std::map<std::string, long long> linear_cases;
    std::map<std::string, long long> depth_cases;
    std::map<std::string, long long> cm_cases;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    void absorb(const SweepSummary& other);

    bool operator==(const SweepSummary&) const = default;
};

// Runs every consistency check on one segment: classification formulas vs
// homology oracle, quotients theorems, decomposition identities, and (when
// applicable) full resolution verification.
SweepSummary check_instance(const AmbientContext& ctx, const Monomial& u,
                            const Monomial& v, const SweepConfig& cfg);

// Exhaustive pass over every pair u >=lex v in every (n, d) of the range.
// The serial runner is the reference; the parallel one shards instances
// across an OpenMP loop and merges in enumeration order, so both produce
// identical summaries.
SweepSummary run_sweep_serial(const SweepConfig& cfg);
SweepSummary run_sweep_parallel(const SweepConfig& cfg);
SweepSummary run_sweep(const SweepConfig& cfg); // dispatch on cfg.workers

std::string summary_json(const SweepConfig& cfg, const SweepSummary& s);

} // namespace lexseg
