#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexseg/errors.hpp"

namespace lexseg {

/// Ambient data shared by a whole computation: n variables x1 > x2 > ... > xn
// and the common degree d of the segment generators.
struct AmbientContext {
    int n = 0;
    int d = 0;

    bool operator==(const AmbientContext&) const = default;
};

// Throws context_error unless n >= 1 and d >= 2 (the public API contract;
// internally reduced contexts with d = 1 are created directly).
void validate_context(const AmbientContext& ctx);

// Monomial in a fixed ring, stored as a dense exponent vector (0-indexed
// internally; all I/O uses 1-based variable indices).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const;
    bool is_unit() const;
    // Exponent of x_i, 1-based.
    int exp(int i) const { return e[static_cast<size_t>(i) - 1]; }

    bool operator==(const Monomial&) const = default;
};

Monomial unit_monomial(int n);
Monomial variable(int n, int i);              // x_i, 1-based
Monomial variable_power(int n, int i, int k); // x_i^k

// --- orders -----------------------------------------------------------------

// Pure lexicographic order with x1 > x2 > ... > xn: compare exponent vectors
// left to right. Works across degrees. Throws context_error on mixed n.
std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b);

// The order used to list complete-segment generators: smaller x1-exponent
// first, ties broken by *descending* lex. Requires equal n and equal degree.
std::strong_ordering prec_cmp(const Monomial& a, const Monomial& b);

// Lexicographic order with the variables reversed (xn > ... > x1): compare
// exponents right to left. Requires equal n.
std::strong_ordering barlex_cmp(const Monomial& a, const Monomial& b);

inline bool lex_less(const Monomial& a, const Monomial& b) { return lex_cmp(a, b) < 0; }
inline bool lex_greater(const Monomial& a, const Monomial& b) { return lex_cmp(a, b) > 0; }

// --- arithmetic -------------------------------------------------------------

Monomial product(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b); // a | b
// b / a when a | b, nullopt otherwise.
std::optional<Monomial> quotient(const Monomial& b, const Monomial& a);

// Largest variable index dividing m (1-based). Throws argument_error on the
// unit monomial.
int max_var(const Monomial& m);
// Smallest variable index dividing m (1-based); argument_error on the unit.
int min_var(const Monomial& m);
// Exponent of x1 (0 when n = 0 is impossible; m must be nonempty).
int nu1(const Monomial& m);

// Drop the first k variables (they must not divide m); result lives in n-k vars.
Monomial drop_leading_vars(const Monomial& m, int k);

// Remove elements divisible by another element (strict divisibility or
// duplicates beyond the first); returns the minimal generating subset.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

} // namespace lexseg
