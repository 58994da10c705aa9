#include "lexseg/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace lexseg {

void validate_context(const AmbientContext& ctx) {
    if (ctx.n < 1)
        throw context_error("need at least one variable, got n=" + std::to_string(ctx.n));
    if (ctx.d < 2)
        throw context_error("generation degree must be at least 2, got d=" + std::to_string(ctx.d));
}

int Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::is_unit() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Monomial unit_monomial(int n) {
    return Monomial(std::vector<int>(static_cast<size_t>(n), 0));
}

Monomial variable(int n, int i) {
    return variable_power(n, i, 1);
}

Monomial variable_power(int n, int i, int k) {
    if (i < 1 || i > n)
        throw argument_error("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    Monomial m = unit_monomial(n);
    m.e[static_cast<size_t>(i) - 1] = k;
    return m;
}

static void require_same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw context_error("monomials from different rings: n=" + std::to_string(a.nvars()) +
                            " vs n=" + std::to_string(b.nvars()));
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i])
            return a.e[i] <=> b.e[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering prec_cmp(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    if (a.degree() != b.degree())
        throw context_error("prec_cmp needs equal degrees");
    if (a.e[0] != b.e[0])
        return a.e[0] <=> b.e[0];
    // equal x1-exponent: larger lex comes first
    return lex_cmp(b, a);
}

std::strong_ordering barlex_cmp(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    for (size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i])
            return a.e[i] <=> b.e[i];
    }
    return std::strong_ordering::equal;
}

Monomial product(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(r.e[i], b.e[i]);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

std::optional<Monomial> quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) return std::nullopt;
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
    return r;
}

int max_var(const Monomial& m) {
    for (size_t i = m.e.size(); i-- > 0;)
        if (m.e[i] > 0) return static_cast<int>(i) + 1;
    throw argument_error("max_var of the unit monomial is undefined");
}

int min_var(const Monomial& m) {
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] > 0) return static_cast<int>(i) + 1;
    throw argument_error("min_var of the unit monomial is undefined");
}

int nu1(const Monomial& m) {
    return m.e.empty() ? 0 : m.e[0];
}

Monomial drop_leading_vars(const Monomial& m, int k) {
    for (int i = 0; i < k; ++i)
        if (m.e[static_cast<size_t>(i)] != 0)
            throw argument_error("cannot drop a variable that divides the monomial");
    return Monomial(std::vector<int>(m.e.begin() + k, m.e.end()));
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return lex_greater(a, b);
    });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : out) {
            if (divides(kept, g)) { redundant = true; break; }
        }
        if (!redundant) out.push_back(g);
    }
    return out;
}

} // namespace lexseg
