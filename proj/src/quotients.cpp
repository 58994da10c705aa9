#include "lexseg/quotients.hpp"

#include <algorithm>
#include <cassert>

namespace lexseg {

std::vector<Monomial> colon_generators(std::span<const Monomial> prefix, const Monomial& w) {
    std::vector<Monomial> gens;
    gens.reserve(prefix.size());
    for (const Monomial& p : prefix) {
        const Monomial g = gcd(p, w);
        gens.push_back(*quotient(p, g));
    }
    gens = minimalize(std::move(gens));
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
    return gens;
}

LinearQuotients has_linear_quotients(std::span<const Monomial> order) {
    LinearQuotients res;
    res.linear = true;
    res.colon_gens.resize(order.size());
    res.sets.resize(order.size());
    for (size_t j = 0; j < order.size(); ++j) {
        res.colon_gens[j] = colon_generators(order.first(j), order[j]);
        bool vars_only = true;
        std::vector<int> idx;
        for (const Monomial& g : res.colon_gens[j]) {
            if (g.degree() != 1) {
                vars_only = false;
                break;
            }
            idx.push_back(min_var(g));
        }
        if (vars_only) {
            std::sort(idx.begin(), idx.end());
            res.sets[j] = std::move(idx);
        } else if (res.linear) {
            res.linear = false;
            res.first_failure = static_cast<int>(j) + 1;
        }
    }
    return res;
}

namespace {

// Reduced-segment images of the lex-descending generator list: divide out the
// common factor and drop the leading variables nothing else uses.
// Index-aligned with gens because both operations keep lex order.
std::vector<Monomial> reduce_gens(const std::vector<Monomial>& gens, const NormalForm& nf) {
    const size_t off = static_cast<size_t>(nf.dropped_leading_vars);
    const Monomial& u = gens.front();
    std::vector<int> common(u.e.size());
    for (size_t j = 0; j < common.size(); ++j)
        common[j] = u.e[j] - (j < off ? 0 : nf.u.e[j - off]);
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const Monomial& g : gens) {
        Monomial r;
        r.e.resize(static_cast<size_t>(nf.ctx.n));
        for (size_t j = 0; j < off; ++j)
            if (g.e[j] != common[j])
                throw state_error("generator varies in a dropped leading variable");
        for (size_t k = 0; k < r.e.size(); ++k) {
            r.e[k] = g.e[off + k] - common[off + k];
            if (r.e[k] < 0)
                throw state_error("generator misses the common factor of the segment");
        }
        out.push_back(std::move(r));
    }
    return out;
}

template <class Less>
std::vector<Monomial> apply_reduced_order(std::vector<Monomial> gens,
                                          const std::vector<Monomial>& red, Less less) {
    std::vector<size_t> idx(gens.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), less);
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (size_t i : idx) out.push_back(std::move(gens[i]));
    return out;
}

} // namespace

std::vector<Monomial> prec_order(const AmbientContext& ctx, const Monomial& u,
                                 const Monomial& v) {
    std::vector<Monomial> gens = enumerate_lexsegment(ctx, u, v);
    if (gens.size() <= 1) return gens;
    const std::vector<Monomial> red = reduce_gens(gens, normalize(ctx, u, v));
    return apply_reduced_order(std::move(gens), red, [&red](size_t a, size_t b) {
        return prec_cmp(red[a], red[b]) < 0;
    });
}

OrderedGenerators quotient_order(const AmbientContext& ctx, const Monomial& u,
                                 const Monomial& v, int shadow_extra) {
    OrderedGenerators out;
    if (u == v) {
        out.gens = enumerate_lexsegment(ctx, u, v);
        out.guaranteed = true;
        out.quotients = has_linear_quotients(out.gens);
        return out;
    }
    if (split_quotient_shape(ctx, u, v)) {
        out.split = true;
        std::vector<Monomial> gens = enumerate_lexsegment(ctx, u, v);
        const std::vector<Monomial> red = reduce_gens(gens, normalize(ctx, u, v));
        // the x1-free block keeps the descending-lex enumeration order
        out.gens = apply_reduced_order(std::move(gens), red, [&red](size_t a, size_t b) {
            const int na = nu1(red[a]) == 0 ? 0 : 1;
            const int nb = nu1(red[b]) == 0 ? 0 : 1;
            if (na != nb) return na < nb;
            if (na == 0) return a < b;
            return barlex_cmp(red[a], red[b]) > 0;
        });
    } else {
        out.gens = prec_order(ctx, u, v);
    }
    out.guaranteed = has_linear_resolution(ctx, u, v, shadow_extra).linear;
    out.quotients = has_linear_quotients(out.gens);
    return out;
}

std::vector<int> set_of(std::span<const Monomial> order, int j) {
    if (j < 1 || static_cast<size_t>(j) > order.size())
        throw argument_error("generator position out of range");
    std::vector<int> idx;
    for (size_t k = 0; k < static_cast<size_t>(j); ++k) {
        const auto colon = colon_generators(order.first(k), order[k]);
        if (k + 1 < static_cast<size_t>(j)) {
            for (const Monomial& g : colon)
                if (g.degree() != 1)
                    throw state_error("colon ideal at position " + std::to_string(k + 1) +
                                      " is not generated by variables");
            continue;
        }
        idx.reserve(colon.size());
        for (const Monomial& g : colon) {
            if (g.degree() != 1)
                throw state_error("colon ideal at position " + std::to_string(j) +
                                  " is not generated by variables");
            idx.push_back(min_var(g));
        }
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

const Monomial& decomposition_g(std::span<const Monomial> order, const Monomial& m) {
    for (const Monomial& g : order)
        if (divides(g, m)) return g;
    throw argument_error("monomial lies outside the ideal");
}

Monomial g_formula(const AmbientContext& ctx, const Monomial& u, const Monomial& v,
                   const Monomial& w, int s) {
    if (s < 1 || s > ctx.n) throw argument_error("variable index out of range");
    if (w.nvars() != ctx.n || w.degree() != ctx.d || lex_greater(w, u) || lex_less(w, v))
        throw argument_error("monomial lies outside the segment");
    // membership of s in set(w) for the canonical order: x_s * w must be
    // divisible by an earlier generator
    std::vector<Monomial> prefix;
    for (Monomial& z : enumerate_lexsegment(ctx, u, v))
        if (prec_cmp(z, w) < 0) prefix.push_back(std::move(z));
    const Monomial m = product(w, variable(ctx.n, s));
    bool in_set = false;
    for (const Monomial& z : prefix)
        if (divides(z, m)) {
            in_set = true;
            break;
        }
    if (!in_set)
        throw argument_error("variable does not belong to set(w)");
    Monomial g = m;
    const Monomial x1v = product(v, variable(ctx.n, 1));
    if (!lex_less(m, x1v)) {
        g.e[0] -= 1;
        return g;
    }
    g.e[static_cast<size_t>(max_var(w)) - 1] -= 1;
    return g;
}

RegularityCheck is_regular_decomposition(std::span<const Monomial> order) {
    const LinearQuotients lq = has_linear_quotients(order);
    if (!lq.linear)
        throw state_error("decomposition regularity needs linear quotients");
    for (size_t j = 0; j < order.size(); ++j) {
        for (int s : lq.sets[j]) {
            const Monomial& g =
                decomposition_g(order, product(order[j], variable(order[j].nvars(), s)));
            const size_t gi = static_cast<size_t>(&g - order.data());
            if (!std::includes(lq.sets[j].begin(), lq.sets[j].end(),
                               lq.sets[gi].begin(), lq.sets[gi].end())) {
                RegularityCheck bad;
                bad.regular = false;
                bad.position = static_cast<int>(j) + 1;
                bad.s = s;
                bad.witness = order[j];
                return bad;
            }
        }
    }
    RegularityCheck ok;
    ok.regular = true;
    return ok;
}

} // namespace lexseg
