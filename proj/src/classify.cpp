#include "lexseg/classify.hpp"

#include <cassert>

namespace lexseg {

namespace {

void require_segment(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    if (u.nvars() != ctx.n || v.nvars() != ctx.n)
        throw context_error("segment ends live in the wrong ring");
    if (u.degree() != ctx.d || v.degree() != ctx.d)
        throw argument_error("segment ends must have degree " + std::to_string(ctx.d));
    if (lex_less(u, v))
        throw argument_error("segment ends are reversed: u <lex v");
}

// xn * m / x1 (m must be divisible by x1)
Monomial slide_to_last(const AmbientContext& ctx, const Monomial& m) {
    Monomial t = m;
    t.e[0] -= 1;
    t.e[static_cast<size_t>(ctx.n) - 1] += 1;
    return t;
}

// u = x1^a x2^(d-a), v = x1^a xn^(d-a) with a >= 1 (the shared-power pattern)
bool matches_condition_a(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    if (ctx.n < 2) return false;
    const int a = nu1(u);
    if (a < 1 || nu1(v) != a) return false;
    Monomial eu = variable_power(ctx.n, 1, a);
    eu.e[1] = ctx.d - a;
    Monomial ev = variable_power(ctx.n, 1, a);
    ev.e[static_cast<size_t>(ctx.n) - 1] = ctx.d - a;
    return u == eu && v == ev;
}

// reduced u = x1 * (part in x_{l+1}..xn), reduced v = x_l xn^(d-1)
bool split_shape_of(const NormalForm& nf) {
    if (nf.principal || nf.maximal_power) return false;
    if (nu1(nf.u) != 1) return false;
    const int l = min_var(nf.v);
    if (l < 2 || l > nf.ctx.n - 1) return false;
    Monomial expect = variable(nf.ctx.n, l);
    expect.e[static_cast<size_t>(nf.ctx.n) - 1] += nf.ctx.d - 1;
    if (nf.v != expect) return false;
    Monomial rest = nf.u;
    rest.e[0] -= 1;
    return !rest.is_unit() && min_var(rest) >= l + 1;
}

} // namespace

NormalForm normalize(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    require_segment(ctx, u, v);
    NormalForm nf;
    nf.ctx = ctx;
    nf.u = u;
    nf.v = v;
    if (u == v) {
        nf.principal = true;
        return nf;
    }
    while (true) {
        const int b1 = nu1(nf.v);
        if (b1 > 0) {
            nf.u.e[0] -= b1;
            nf.v.e[0] -= b1;
            nf.ctx.d -= b1;
            nf.divided_power += b1;
            continue;
        }
        if (nu1(nf.u) == 0) {
            nf.u = drop_leading_vars(nf.u, 1);
            nf.v = drop_leading_vars(nf.v, 1);
            nf.ctx.n -= 1;
            nf.dropped_leading_vars += 1;
            continue;
        }
        break;
    }
    if (nf.u == variable_power(nf.ctx.n, 1, nf.ctx.d) &&
        nf.v == variable_power(nf.ctx.n, nf.ctx.n, nf.ctx.d))
        nf.maximal_power = true;
    return nf;
}

const char* linear_case_name(LinearCase c) {
    switch (c) {
        case LinearCase::principal: return "principal";
        case LinearCase::maximal_power: return "maximal_power";
        case LinearCase::complete_a: return "complete_a";
        case LinearCase::complete_b: return "complete_b";
        case LinearCase::complete_c: return "complete_c";
        case LinearCase::noncomplete_split: return "noncomplete_split";
        case LinearCase::none: return "none";
    }
    return "?";
}

LinearResolutionResult has_linear_resolution(const AmbientContext& ctx,
                                             const Monomial& u, const Monomial& v,
                                             int shadow_extra) {
    require_segment(ctx, u, v);
    LinearResolutionResult res;
    if (u == v) {
        res.linear = true;
        res.which = LinearCase::principal;
        res.reduced_complete = true;
        return res;
    }
    const NormalForm nf = normalize(ctx, u, v);
    if (nf.maximal_power) {
        res.linear = true;
        res.which = matches_condition_a(ctx, u, v) ? LinearCase::complete_a
                                                   : LinearCase::maximal_power;
        res.reduced_complete = true;
        return res;
    }
    const CompletenessCheck comp =
        is_completely_lexsegment(nf.ctx, nf.u, nf.v, shadow_extra);
    res.reduced_complete = comp.complete;
    if (comp.complete) {
        const int a1 = nu1(nf.u); // nu1(v) = 0 here
        if (a1 >= 2) {
            res.linear = true;
            res.which = LinearCase::complete_b;
            return res;
        }
        // a1 == 1: compare the slide of the predecessor of v against u
        const auto z = lex_predecessor(nf.ctx, nf.v);
        if (!z) {
            // v = xn^d: nothing below v, the condition is vacuous
            res.linear = true;
            res.which = LinearCase::complete_c;
            return res;
        }
        Monomial t = *z;
        t.e[static_cast<size_t>(max_var(t)) - 1] -= 1;
        t.e[0] += 1;
        if (!lex_greater(t, nf.u)) {
            res.linear = true;
            res.which = LinearCase::complete_c;
            return res;
        }
        return res;
    }
    if (split_shape_of(nf)) {
        res.linear = true;
        res.which = LinearCase::noncomplete_split;
    }
    return res;
}

bool split_quotient_shape(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    return split_shape_of(normalize(ctx, u, v));
}

int krull_dimension(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    require_segment(ctx, u, v);
    if (u == v) return ctx.n - 1;
    Monomial uu = u, vv = v;
    int n = ctx.n;
    int dropped = 0;
    while (nu1(uu) == 0) {
        assert(nu1(vv) == 0);
        uu = drop_leading_vars(uu, 1);
        vv = drop_leading_vars(vv, 1);
        n -= 1;
        dropped += 1;
    }
    if (uu == variable_power(n, 1, ctx.d) && vv == variable_power(n, n, ctx.d))
        return dropped; // the reduced segment spans all of M_d
    const int q = min_var(vv);
    return dropped + (q < n ? n - q : 1);
}

bool depth_is_zero(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    require_segment(ctx, u, v);
    if (nu1(u) < 1 || nu1(v) != 0)
        throw context_error("depth_is_zero expects nu1(u) > 0 and nu1(v) = 0");
    return !lex_less(slide_to_last(ctx, u), v);
}

const char* depth_case_name(DepthCase c) {
    switch (c) {
        case DepthCase::principal: return "principal";
        case DepthCase::maximal_power: return "maximal_power";
        case DepthCase::variables: return "variables";
        case DepthCase::zero: return "zero";
        case DepthCase::a: return "a";
        case DepthCase::b: return "b";
        case DepthCase::c: return "c";
    }
    return "?";
}

DepthResult depth(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    const NormalForm nf = normalize(ctx, u, v);
    if (nf.principal) return {ctx.n - 1, DepthCase::principal};
    if (nf.maximal_power) return {nf.dropped_leading_vars, DepthCase::maximal_power};
    if (nf.ctx.d == 1) {
        // reduced segment is x1..xq: a regular sequence
        const int q = min_var(nf.v);
        return {nf.dropped_leading_vars + nf.ctx.n - q, DepthCase::variables};
    }
    if (depth_is_zero(nf.ctx, nf.u, nf.v))
        return {nf.dropped_leading_vars, DepthCase::zero};
    // from here nu1(u) = 1, otherwise the slide test above would have fired
    assert(nu1(nf.u) == 1);
    Monomial rest = nf.u;
    rest.e[0] -= 1;
    const int l = min_var(rest);
    const int n = nf.ctx.n, d = nf.ctx.d;
    if (nf.v == variable_power(n, 2, d) && l >= 4)
        return {nf.dropped_leading_vars + l - 2, DepthCase::a};
    if (n >= 3 && nf.v.e[1] == d - 1) {
        Monomial tail = nf.v;
        tail.e[1] = 0;
        if (!tail.is_unit()) {
            const int j = min_var(tail);
            if (tail == variable(n, j) && j >= 3 && j <= n - 2 && l >= j + 2)
                return {nf.dropped_leading_vars + l - j, DepthCase::b};
        }
    }
    return {nf.dropped_leading_vars + 1, DepthCase::c};
}

int proj_dimension(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    return ctx.n - depth(ctx, u, v).depth;
}

const char* cm_case_name(CmCase c) {
    switch (c) {
        case CmCase::principal: return "principal";
        case CmCase::dimension_zero: return "dimension_zero";
        case CmCase::theorem_a: return "theorem_a";
        case CmCase::theorem_b: return "theorem_b";
        case CmCase::cm_other: return "cm_other";
        case CmCase::not_cm: return "not_cm";
    }
    return "?";
}

CmResult is_cohen_macaulay(const AmbientContext& ctx, const Monomial& u, const Monomial& v) {
    const int dim = krull_dimension(ctx, u, v);
    const DepthResult dep = depth(ctx, u, v);
    CmResult res;
    res.cohen_macaulay = (dim == dep.depth);
    if (!res.cohen_macaulay) {
        res.which = CmCase::not_cm;
        return res;
    }
    if (u == v) {
        res.which = CmCase::principal;
        return res;
    }
    if (dim == 0) {
        res.which = CmCase::dimension_zero;
        return res;
    }
    Monomial ua = variable(ctx.n, 1);
    ua.e[static_cast<size_t>(ctx.n) - 1] += ctx.d - 1;
    if (u == ua && v == variable_power(ctx.n, 2, ctx.d)) {
        res.which = CmCase::theorem_a;
        return res;
    }
    if (ctx.n >= 2) {
        const int a = v.e[static_cast<size_t>(ctx.n) - 2];
        const int b = v.e[static_cast<size_t>(ctx.n) - 1];
        if (a > 0 && a + b == ctx.d && nu1(u) >= 1 &&
            lex_less(slide_to_last(ctx, u), v)) {
            res.which = CmCase::theorem_b;
            return res;
        }
    }
    res.which = CmCase::cm_other;
    return res;
}

} // namespace lexseg
