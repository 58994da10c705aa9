#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lexseg/monomial.hpp"

namespace lexseg {

// All monomials of degree d in n variables, lex-descending (x1^d first).
std::vector<Monomial> monomials_of_degree(int n, int d);

// The next monomial of the same degree in lex-descending order, i.e. the
// largest monomial strictly smaller than m; nullopt at xn^d.
std::optional<Monomial> next_lex_smaller(const Monomial& m);

// Largest degree-d monomial strictly below v in lex order (nullopt at xn^d).
std::optional<Monomial> lex_predecessor(const AmbientContext& ctx, const Monomial& v);

// The segment {w : u >=lex w >=lex v} in degree d, listed lex-descending.
// Walks predecessor steps from u (never filters all of M_d).
// Throws argument_error when u <lex v or degrees differ from ctx.d.
std::vector<Monomial> enumerate_lexsegment(const AmbientContext& ctx,
                                           const Monomial& u, const Monomial& v);

// {m * x_i : m in T, 1 <= i <= n}, deduplicated, lex-descending.
// All of T must share one degree (argument_error otherwise); shadow of the
// empty set is empty.
std::vector<Monomial> shadow(std::span<const Monomial> T, int n);

// True iff T (nonempty, equal degrees) is exactly the lex interval between
// its own maximum and minimum.
bool is_lexsegment_set(std::span<const Monomial> T, int n);

struct CompletenessCheck {
    bool complete = false;
    int shadows_checked = 0;           // how many iterated shadows were inspected
    int first_failure_degree = -1;     // degree whose shadow is not a segment, -1 if none
    std::optional<Monomial> missing;   // an interval member absent from that shadow
};

// Iterates the shadow max_extra_degrees times (default 2) and tests each for
// being a lexsegment set. max_extra_degrees must be >= 1.
CompletenessCheck is_completely_lexsegment(const AmbientContext& ctx,
                                           const Monomial& u, const Monomial& v,
                                           int max_extra_degrees = 2);

} // namespace lexseg
