#pragma once

#include <span>
#include <string>
#include <vector>

#include "lexseg/oracle.hpp"
#include "lexseg/poly.hpp"
#include "lexseg/quotients.hpp"

namespace lexseg {

// Free-module basis element f(sigma; gen) of the iterated mapping cone.
// Lives at homological position |sigma| + 1 of the resolution of S/I and in
// internal degree |sigma| + deg(gen).
struct BasisSymbol {
    std::vector<int> sigma; // ascending variable indices, subset of set(gen)
    Monomial gen;

    int position() const { return static_cast<int>(sigma.size()) + 1; }
    int internal_degree() const { return static_cast<int>(sigma.size()) + gen.degree(); }
    // exponent vector of x^sigma * gen
    std::vector<int> multidegree() const;

    bool operator==(const BasisSymbol&) const = default;
};

struct MatrixEntry {
    int row = 0;
    int col = 0;
    int sign = 0; // +1 or -1
    Monomial mono;

    bool operator==(const MatrixEntry&) const = default;
};

// Sparse matrix of signed monomials; entries sorted by (col, row).
struct DifferentialMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<MatrixEntry> entries;

    bool operator==(const DifferentialMatrix&) const = default;
};

struct GradedResolution {
    int n = 0;
    // basis[i] lists position-(i+1) symbols; F_0 = S has rank 1 and no symbol
    std::vector<std::vector<BasisSymbol>> basis;
    // diff[k] is the differential from position k+1 to position k, so
    // diff[0] maps F_1 onto the generators inside F_0
    std::vector<DifferentialMatrix> diff;
    bool has_matrices = false;
    std::string construction; // "mapping_cone" or "sets_only"

    int length() const { return static_cast<int>(basis.size()); }
    // rank of F_i, position 0 included
    long long rank(int i) const;
    // internal degrees at position i, ascending ({0} at position 0)
    std::vector<int> twists(int i) const;
};

// Ranks and twists of the mapping-cone resolution read off the colon sets,
// without differentials. Requires equal generator degrees and linear
// quotients for the given order (argument_error / state_error).
GradedResolution betti_from_sets(int n, std::span<const Monomial> order);

// Full mapping-cone differentials for an explicit order with linear
// quotients. Basis at each position sorted by generator position, then by
// sigma as a tuple.
GradedResolution build_resolution_from_order(int n, std::span<const Monomial> order);

// Mapping-cone resolution of a lexsegment ideal. Only completely lexsegment
// segments with linear resolution are accepted (the decomposition function is
// then regular, making the cone minimal); anything else throws
// unsupported_construction.
GradedResolution build_resolution(const AmbientContext& ctx, const Monomial& u,
                                  const Monomial& v, int shadow_extra = 2);

struct VerifyReport {
    bool composes_to_zero = true;
    bool minimal = true;
    bool exact = true;
    bool cokernel_matches = true;
    int fail_position = -1; // homological position of the first failure
    int fail_degree = -1;   // internal degree of the first failure, if graded
    std::string detail;

    bool ok() const { return composes_to_zero && minimal && exact && cokernel_matches; }
};

// Certify the resolution: differentials compose to zero, no unit entries, and
// every graded piece up to max_check_degree (default max gen degree + n + 2)
// is exact at positions >= 1 with the position-0 cokernel matching the
// monomial count of S/I. All linear algebra is exact.
VerifyReport verify_resolution(const GradedResolution& res, std::span<const Monomial> gens,
                               int max_check_degree = -1);

// Alternating sum of t^{internal degree} over all positions; equals the
// K-polynomial of S/I when the resolution is exact.
IntPoly hilbert_numerator(const GradedResolution& res);

// Graded ranks as a Betti table (position, internal degree), including the
// rank-one position 0 at degree 0.
BettiTable betti_table(const GradedResolution& res);

} // namespace lexseg
