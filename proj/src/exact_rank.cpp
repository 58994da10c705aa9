#include "lexseg/exact_rank.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace lexseg {

namespace {

constexpr std::uint64_t P = 2147483647ULL; // 2^31 - 1, prime

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = r * b % P;
        b = b * b % P;
        e >>= 1;
    }
    return r;
}

// Fraction-free elimination; every division is exact. Throws overflow_error
// when an intermediate value leaves the 64-bit safe range.
int bareiss_rank_ll(const IntMatrix& m) {
    std::vector<long long> a = m.a;
    const int R = m.rows, C = m.cols;
    auto at = [&](int r, int c) -> long long& { return a[static_cast<size_t>(r) * C + c]; };
    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < C; ++c) std::swap(at(piv, c), at(rank, c));
        const long long pval = at(rank, col);
        for (int r = rank + 1; r < R; ++r) {
            const long long f = at(r, col);
            for (int c = col; c < C; ++c) {
                const __int128 t =
                    static_cast<__int128>(pval) * at(r, c) - static_cast<__int128>(f) * at(rank, c);
                const __int128 q = t / prev;
                if (q > INT64_MAX / 2 || q < INT64_MIN / 2)
                    throw std::overflow_error("bareiss");
                at(r, c) = static_cast<long long>(q);
            }
        }
        prev = pval;
        ++rank;
    }
    return rank;
}

int bareiss_rank_mpz(const IntMatrix& m) {
    const int R = m.rows, C = m.cols;
    std::vector<mpz_class> a(static_cast<size_t>(R) * C);
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = static_cast<long>(m.a[i]);
    auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<size_t>(r) * C + c]; };
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < C; ++c) std::swap(at(piv, c), at(rank, c));
        const mpz_class pval = at(rank, col);
        for (int r = rank + 1; r < R; ++r) {
            const mpz_class f = at(r, col);
            for (int c = col; c < C; ++c) {
                mpz_class t = pval * at(r, c) - f * at(rank, c);
                mpz_divexact(at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pval;
        ++rank;
    }
    return rank;
}

} // namespace

int rank_mod_p(const IntMatrix& m) {
    std::vector<std::uint64_t> a(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) {
        long long v = m.a[i] % static_cast<long long>(P);
        if (v < 0) v += static_cast<long long>(P);
        a[i] = static_cast<std::uint64_t>(v);
    }
    const int R = m.rows, C = m.cols;
    auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<size_t>(r) * C + c]; };
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c < C; ++c) std::swap(at(piv, c), at(rank, c));
        const std::uint64_t inv = pow_mod(at(rank, col), P - 2);
        for (int r = rank + 1; r < R; ++r) {
            if (at(r, col) == 0) continue;
            const std::uint64_t f = at(r, col) * inv % P;
            for (int c = col; c < C; ++c)
                at(r, c) = (at(r, c) + P - f * at(rank, c) % P) % P;
        }
        ++rank;
    }
    return rank;
}

int rank_exact(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return bareiss_rank_ll(m);
    } catch (const std::overflow_error&) {
        return bareiss_rank_mpz(m);
    }
}

int homology_dimension(const IntMatrix& out_map, const IntMatrix& in_map) {
    const int dim = out_map.cols;
    if (in_map.rows != dim)
        throw argument_error("complex piece dimensions disagree");
    const int hp = dim - rank_mod_p(out_map) - rank_mod_p(in_map);
    if (hp < 0) throw state_error("maps do not form a complex piece");
    if (hp == 0) return 0;
    const int h = dim - rank_exact(out_map) - rank_exact(in_map);
    if (h < 0) throw state_error("maps do not form a complex piece");
    return h;
}

} // namespace lexseg
