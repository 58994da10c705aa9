#pragma once

#include <string>

#include "lexseg/lexsegment.hpp"
#include "lexseg/monomial.hpp"

namespace lexseg {

// Result of reducing a segment to standard position: divide both ends by the
// shared power of x1, then drop leading variables dividing neither end, until
// nu1(u) > 0 and nu1(v) = 0 (or a degenerate flag fires).
//
// Depth and Betti numbers are invariant under the division step and grow by
// dropped_leading_vars under the drop steps. Krull dimension is NOT invariant
// under the division step; krull_dimension never divides.
struct NormalForm {
    AmbientContext ctx;   // reduced ring/degree
    Monomial u, v;
    int dropped_leading_vars = 0;
    int divided_power = 0;
    bool principal = false;       // u == v
    bool maximal_power = false;   // reduced segment is all of M_d' ((x1..xn')^d')
};

NormalForm normalize(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

enum class LinearCase {
    principal,        // single generator
    maximal_power,    // reduces to a power of the irrelevant maximal ideal
    complete_a,       // u = x1^a x2^(d-a), v = x1^a xn^(d-a)
    complete_b,       // nu1(v) < nu1(u) - 1 after reduction
    complete_c,       // nu1(v) = nu1(u) - 1 and x1 z / x_max(z) <=lex u for z = pred(v)
    noncomplete_split,// u = x1 * (vars >= l+1 part), v = x_l xn^(d-1)
    none,
};

const char* linear_case_name(LinearCase c);

struct LinearResolutionResult {
    bool linear = false;
    LinearCase which = LinearCase::none;
    bool reduced_complete = false; // completeness of the reduced segment (drives the criteria)
};

// Decides whether the segment ideal has a linear (minimal free) resolution by
// the closed criteria, normalizing first. shadow_extra bounds the completeness
// iteration.
LinearResolutionResult has_linear_resolution(const AmbientContext& ctx,
                                             const Monomial& u, const Monomial& v,
                                             int shadow_extra = 2);

// True when the reduced segment has the two-block shape u = x1 * (monomial in
// x_{l+1}..xn), v = x_l xn^(d-1) with 2 <= l <= n-1. Every non-complete
// segment with linear resolution has this shape, and for it the x1-free-first
// block order has variable colons whether or not the segment is complete.
bool split_quotient_shape(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

// dim S/I. Uses the smallest variable index q appearing in v after dropping
// unused leading variables: n - q for q < n, 1 for q = n; 0 for the full M_d;
// n - 1 for a principal segment.
int krull_dimension(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

// The depth-zero test on a segment already in standard position
// (nu1(u) > 0, nu1(v) = 0): true iff xn * u / x1 >=lex v.
// Throws context_error when the input is not in standard position.
bool depth_is_zero(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

enum class DepthCase {
    principal,
    maximal_power, // depth dropped_leading_vars (0 in the reduced ring)
    variables,     // reduced degree 1: ideal generated by x1..xq
    zero,          // depth_is_zero fired in the reduced ring
    a,             // v = x2^d, second variable of u is x_l with l >= 4: depth l-2
    b,             // v = x2^(d-1) x_j, 3 <= j <= n-2, l >= j+2: depth l-j
    c,             // fallback: depth 1
};

const char* depth_case_name(DepthCase c);

struct DepthResult {
    int depth = 0;
    DepthCase which = DepthCase::c;
};

DepthResult depth(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

// n - depth (Auslander-Buchsbaum).
int proj_dimension(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

enum class CmCase {
    principal,
    dimension_zero, // full M_d
    theorem_a,      // u = x1 xn^(d-1), v = x2^d
    theorem_b,      // v = x_{n-1}^a xn^(d-a), a > 0, xn u / x1 <lex v
    cm_other,       // Cohen-Macaulay outside the a1 > b1 patterns (drop-reduced cases)
    not_cm,
};

const char* cm_case_name(CmCase c);

struct CmResult {
    bool cohen_macaulay = false;
    CmCase which = CmCase::not_cm;
};

// True iff dim S/I == depth S/I; the label reports which closed pattern fired.
CmResult is_cohen_macaulay(const AmbientContext& ctx, const Monomial& u, const Monomial& v);

} // namespace lexseg
