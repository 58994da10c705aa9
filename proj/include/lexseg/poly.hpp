#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "lexseg/errors.hpp"

namespace lexseg {

// Integer polynomial in one variable t. Dense coefficients from degree 0,
// trailing zeros trimmed; the zero polynomial has an empty coefficient list.
struct IntPoly {
    std::vector<long long> c;

    static IntPoly one() { return IntPoly{{1}}; }
    static IntPoly term(long long coeff, int deg) {
        IntPoly p;
        if (coeff != 0) {
            p.c.assign(static_cast<size_t>(deg) + 1, 0);
            p.c.back() = coeff;
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : 0;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    bool operator==(const IntPoly&) const = default;

    // "1 - 5*t^3 + 5*t^4 - t^5"; the zero polynomial prints as "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            const long long mag = std::llabs(c[k]);
            if (out.empty())
                out += (c[k] < 0) ? "-" : "";
            else
                out += (c[k] < 0) ? " - " : " + ";
            if (mag != 1 || k == 0) out += std::to_string(mag);
            if (k >= 1) {
                if (mag != 1) out += "*";
                out += "t";
                if (k >= 2) out += "^" + std::to_string(k);
            }
        }
        return out;
    }
};

inline IntPoly one_minus_t_power(int k) {
    IntPoly p = IntPoly::one();
    const IntPoly f = IntPoly::one() - IntPoly::term(1, 1);
    for (int i = 0; i < k; ++i) p = p * f;
    return p;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r < 0) throw capacity_error("binomial overflow");
    }
    return r;
}

} // namespace lexseg
