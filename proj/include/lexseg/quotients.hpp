#pragma once

#include <span>
#include <vector>

#include "lexseg/classify.hpp"
#include "lexseg/lexsegment.hpp"

namespace lexseg {

// Minimal generators of (prefix[0],...,prefix[k-1]) : w, sorted lex-descending.
// Empty when prefix is empty.
std::vector<Monomial> colon_generators(std::span<const Monomial> prefix, const Monomial& w);

struct LinearQuotients {
    bool linear = false;
    int first_failure = 0; // 1-based position of the first non-variable colon, 0 if none
    std::vector<std::vector<Monomial>> colon_gens; // per position
    std::vector<std::vector<int>> sets; // ascending variable indices; empty at a failed position
};

// Compute every successive colon ideal and check each is generated by variables.
LinearQuotients has_linear_quotients(std::span<const Monomial> order);

struct OrderedGenerators {
    std::vector<Monomial> gens; // the segment in iterated-colon order
    bool guaranteed = false;    // the order provably yields variable colons
    bool split = false;         // two-block order (x1-free block first) was used
    LinearQuotients quotients;  // colons and sets for this order
};

// Generators of the segment sorted by the precedence order of the reduced
// segment: ascending x1-exponent, ties by descending lex. Reduction (dividing
// out the common factor and dropping unused leading variables) keeps lex
// order, so the permutation transfers back position by position; colon ideals
// only see the reduced part.
std::vector<Monomial> prec_order(const AmbientContext& ctx, const Monomial& u,
                                 const Monomial& v);

// Order the generators of the segment for iterated colon ideals. When the
// reduced segment has the split shape (see split_quotient_shape) the x1-free
// block comes first in descending lex, then the x1-divisible block in
// descending reversed lex (xn > ... > x1); otherwise the precedence order is
// used. The guaranteed flag is set exactly when the segment has a linear
// resolution.
OrderedGenerators quotient_order(const AmbientContext& ctx, const Monomial& u,
                                 const Monomial& v, int shadow_extra = 2);

// Variable indices generating the colon at position j (1-based), ascending.
// Throws state_error when some colon at a position <= j is not generated by
// variables. set_of(order, 1) is empty.
std::vector<int> set_of(std::span<const Monomial> order, int j);

// The earliest generator in the given order dividing m; argument_error when
// none does (m is then outside the ideal).
const Monomial& decomposition_g(std::span<const Monomial> order, const Monomial& m);

// Closed form of the decomposition of x_s * w for complete segments with
// linear resolution: divide by x1 when the product stays lex-at-least x1*v,
// otherwise divide by the largest variable of w. Validates w in L(u,v) and
// s in set(w) for the canonical order of the segment.
Monomial g_formula(const AmbientContext& ctx, const Monomial& u, const Monomial& v,
                   const Monomial& w, int s);

struct RegularityCheck {
    bool regular = false;
    int position = 0;  // 1-based generator position of the witness, 0 if regular
    int s = 0;         // offending variable index, 0 if regular
    Monomial witness;  // the generator at that position
};

// Check set(g(x_s w)) is contained in set(w) for every generator w and every
// s in set(w). Requires the order to have linear quotients (state_error).
RegularityCheck is_regular_decomposition(std::span<const Monomial> order);

} // namespace lexseg
