#include "lexseg/parse.hpp"

#include <cctype>

#include "lexseg/errors.hpp"

namespace lexseg {

namespace {

// limit on any single parsed integer so exponent arithmetic stays in int
constexpr long long kNumberLimit = 1000000;

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c, const char* what) {
        if (peek() != c) throw parse_error(pos, what);
        ++pos;
    }
    long long number(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error(pos, what);
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > kNumberLimit) throw parse_error(start, "number too large");
            ++pos;
        }
        return v;
    }
};

} // namespace

Monomial parse_monomial(std::string_view text, int n) {
    if (n < 1) throw argument_error("need at least one variable");
    Scanner sc{text};
    std::vector<int> e(static_cast<size_t>(n), 0);
    if (sc.peek() == '[') {
        ++sc.pos;
        for (int i = 0; i < n; ++i) {
            if (i > 0) sc.expect(',', "expected ','");
            e[static_cast<size_t>(i)] = static_cast<int>(sc.number("expected an exponent"));
        }
        sc.expect(']', "expected ']'");
    } else if (sc.peek() == '1') {
        // the unit monomial, as printed by print_monomial
        const std::size_t at = sc.pos;
        if (sc.number("expected '1'") != 1) throw parse_error(at, "expected '1'");
    } else {
        while (true) {
            sc.expect('x', "expected 'x'");
            const std::size_t at = sc.pos;
            const long long idx = sc.number("expected a variable index");
            if (idx < 1 || idx > n)
                throw parse_error(at, "variable index out of range");
            long long exp = 1;
            if (sc.peek() == '^') {
                ++sc.pos;
                exp = sc.number("expected an exponent");
                if (exp < 1) throw parse_error(sc.pos, "exponent must be positive");
            }
            const long long total = e[static_cast<size_t>(idx) - 1] + exp;
            if (total > kNumberLimit) throw parse_error(at, "exponent too large");
            e[static_cast<size_t>(idx) - 1] = static_cast<int>(total);
            if (sc.peek() != '*') break;
            ++sc.pos;
        }
    }
    sc.skip_ws();
    if (sc.pos < sc.s.size()) throw parse_error(sc.pos, "unexpected trailing input");
    return Monomial{std::move(e)};
}

std::string print_monomial(const Monomial& m) {
    std::string out;
    for (int i = 1; i <= m.nvars(); ++i) {
        const int e = m.exp(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace lexseg
