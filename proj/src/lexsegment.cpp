#include "lexseg/lexsegment.hpp"

#include <algorithm>
#include <numeric>

namespace lexseg {

std::vector<Monomial> monomials_of_degree(int n, int d) {
    if (n < 1) throw context_error("monomials_of_degree needs n >= 1");
    if (d < 0) throw argument_error("monomials_of_degree needs d >= 0");
    std::vector<Monomial> out;
    if (d == 0) {
        out.push_back(unit_monomial(n));
        return out;
    }
    std::optional<Monomial> cur = variable_power(n, 1, d);
    while (cur) {
        out.push_back(*cur);
        cur = next_lex_smaller(*cur);
    }
    return out;
}

std::optional<Monomial> next_lex_smaller(const Monomial& m) {
    const int n = m.nvars();
    // rightmost position before xn that still carries an exponent
    int j = -1;
    for (int i = n - 2; i >= 0; --i) {
        if (m.e[static_cast<size_t>(i)] > 0) { j = i; break; }
    }
    if (j < 0) return std::nullopt; // m = xn^d (or n = 1)
    Monomial r = m;
    int moved = 1;
    for (int i = j + 1; i < n; ++i) {
        moved += r.e[static_cast<size_t>(i)];
        r.e[static_cast<size_t>(i)] = 0;
    }
    r.e[static_cast<size_t>(j)] -= 1;
    r.e[static_cast<size_t>(j) + 1] = moved;
    return r;
}

static void require_degree(const AmbientContext& ctx, const Monomial& m, const char* name) {
    if (m.nvars() != ctx.n)
        throw context_error(std::string(name) + " lives in the wrong ring");
    if (m.degree() != ctx.d)
        throw argument_error(std::string(name) + " must have degree " + std::to_string(ctx.d));
}

std::optional<Monomial> lex_predecessor(const AmbientContext& ctx, const Monomial& v) {
    require_degree(ctx, v, "v");
    return next_lex_smaller(v);
}

std::vector<Monomial> enumerate_lexsegment(const AmbientContext& ctx,
                                           const Monomial& u, const Monomial& v) {
    require_degree(ctx, u, "u");
    require_degree(ctx, v, "v");
    if (lex_less(u, v))
        throw argument_error("segment ends are reversed: u <lex v");
    std::vector<Monomial> out;
    Monomial cur = u;
    while (true) {
        out.push_back(cur);
        if (cur == v) break;
        auto next = next_lex_smaller(cur);
        if (!next)
            throw state_error("walked past the end of the degree without reaching v");
        cur = *next;
    }
    return out;
}

std::vector<Monomial> shadow(std::span<const Monomial> T, int n) {
    if (T.empty()) return {};
    const int deg = T.front().degree();
    for (const Monomial& m : T) {
        if (m.nvars() != n) throw context_error("shadow: mixed rings");
        if (m.degree() != deg) throw argument_error("shadow: mixed degrees");
    }
    std::vector<Monomial> out;
    out.reserve(T.size() * static_cast<size_t>(n));
    for (const Monomial& m : T) {
        for (int i = 1; i <= n; ++i) {
            Monomial p = m;
            p.e[static_cast<size_t>(i) - 1] += 1;
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), lex_greater);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_lexsegment_set(std::span<const Monomial> T, int n) {
    if (T.empty()) throw argument_error("is_lexsegment_set: empty set");
    std::vector<Monomial> sorted(T.begin(), T.end());
    const int deg = sorted.front().degree();
    for (const Monomial& m : sorted) {
        if (m.nvars() != n) throw context_error("is_lexsegment_set: mixed rings");
        if (m.degree() != deg) throw argument_error("is_lexsegment_set: mixed degrees");
    }
    std::sort(sorted.begin(), sorted.end(), lex_greater);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // walk from the max; the set is a segment iff each walk step stays inside
    Monomial cur = sorted.front();
    for (size_t i = 1; i < sorted.size(); ++i) {
        auto next = next_lex_smaller(cur);
        if (!next || !(*next == sorted[i])) return false;
        cur = *next;
    }
    return true;
}

CompletenessCheck is_completely_lexsegment(const AmbientContext& ctx,
                                           const Monomial& u, const Monomial& v,
                                           int max_extra_degrees) {
    if (max_extra_degrees < 1)
        throw argument_error("max_extra_degrees must be >= 1");
    CompletenessCheck res;
    std::vector<Monomial> cur = enumerate_lexsegment(ctx, u, v);
    for (int k = 1; k <= max_extra_degrees; ++k) {
        cur = shadow(cur, ctx.n);
        res.shadows_checked = k;
        if (!is_lexsegment_set(cur, ctx.n)) {
            res.complete = false;
            res.first_failure_degree = ctx.d + k;
            // locate the first interval member the shadow skips
            Monomial walk = cur.front();
            for (size_t i = 1; i < cur.size(); ++i) {
                auto next = next_lex_smaller(walk);
                if (!next) break;
                if (!(*next == cur[i])) { res.missing = *next; break; }
                walk = *next;
            }
            return res;
        }
    }
    res.complete = true;
    return res;
}

} // namespace lexseg
