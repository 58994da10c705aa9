#include "lexseg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "lexseg/exact_rank.hpp"

namespace lexseg {

long long BettiTable::beta(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::proj_dim() const {
    int p = 0;
    for (const auto& [key, val] : entries)
        if (val != 0) p = std::max(p, key.first);
    return p;
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [key, val] : entries)
        if (key.first == i) t += val;
    return t;
}

IntPoly BettiTable::alternating_sum() const {
    IntPoly p;
    for (const auto& [key, val] : entries) {
        const long long sign = (key.first % 2 == 0) ? 1 : -1;
        p += IntPoly::term(sign * val, key.second);
    }
    return p;
}

bool BettiTable::concentrated_linear(int gen_degree) const {
    for (const auto& [key, val] : entries) {
        if (val == 0 || key.first < 1) continue;
        if (key.second != gen_degree + key.first - 1) return false;
    }
    return true;
}

namespace {

void require_no_unit(std::span<const Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.is_unit()) throw argument_error("the unit monomial is not allowed here");
}

void require_minimal(std::span<const Monomial> gens) {
    require_no_unit(gens);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            if (i != j && divides(gens[i], gens[j]))
                throw argument_error("generating set is not minimal");
}

// Dense membership table of I over the box 0 <= a <= L (componentwise lcm of
// the generators): in_I[flat(a)] != 0 iff x^a lies in I.
struct MembershipBox {
    int n = 0;
    std::vector<int> limit;  // L
    std::vector<size_t> stride;
    std::vector<char> in_ideal;

    size_t flat(const std::vector<int>& a) const {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx += stride[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        return idx;
    }
};

MembershipBox build_membership_box(std::span<const Monomial> gens, int n) {
    MembershipBox box;
    box.n = n;
    box.limit.assign(static_cast<size_t>(n), 0);
    for (const Monomial& g : gens) {
        if (g.nvars() != n) throw context_error("generator lives in the wrong ring");
        for (int i = 0; i < n; ++i)
            box.limit[static_cast<size_t>(i)] =
                std::max(box.limit[static_cast<size_t>(i)], g.e[static_cast<size_t>(i)]);
    }
    size_t total = 1;
    box.stride.assign(static_cast<size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        box.stride[static_cast<size_t>(i)] = total;
        total *= static_cast<size_t>(box.limit[static_cast<size_t>(i)]) + 1;
        if (total > (size_t{1} << 27))
            throw capacity_error("membership box too large");
    }
    box.in_ideal.assign(total, 0);
    for (const Monomial& g : gens) box.in_ideal[box.flat(g.e)] = 1;
    // row-major pass: every a - e_i precedes a, so one sweep closes the ideal
    std::vector<int> a(static_cast<size_t>(n), 0);
    for (size_t idx = 0; idx < total; ++idx) {
        if (!box.in_ideal[idx]) {
            for (int i = 0; i < n; ++i)
                if (a[static_cast<size_t>(i)] > 0 &&
                    box.in_ideal[idx - box.stride[static_cast<size_t>(i)]]) {
                    box.in_ideal[idx] = 1;
                    break;
                }
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++a[static_cast<size_t>(i)] <= box.limit[static_cast<size_t>(i)]) break;
            a[static_cast<size_t>(i)] = 0;
        }
    }
    return box;
}

int sign_of_drop(unsigned sigma, int s) {
    const unsigned below = sigma & ((1u << s) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

BettiTable taylor_betti(std::span<const Monomial> gens, int n, int cap) {
    require_minimal(gens);
    const int m = static_cast<int>(gens.size());
    if (m > cap || m > 30) throw capacity_error("too many generators for the subset complex");
    BettiTable table;
    if (m == 0) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    // group the faces (subsets of gens) by their lcm
    std::map<std::vector<int>, std::vector<std::uint32_t>> groups;
    std::vector<int> l(static_cast<size_t>(n));
    for (std::uint32_t f = 0; f < (1u << m); ++f) {
        std::fill(l.begin(), l.end(), 0);
        for (int i = 0; i < m; ++i)
            if (f & (1u << i))
                for (int k = 0; k < n; ++k)
                    l[static_cast<size_t>(k)] =
                        std::max(l[static_cast<size_t>(k)], gens[static_cast<size_t>(i)].e[static_cast<size_t>(k)]);
        groups[l].push_back(f);
    }
    for (const auto& [mu, faces] : groups) {
        const int degree = std::accumulate(mu.begin(), mu.end(), 0);
        // faces of the group bucketed by size, with positions for row lookup
        std::map<int, std::vector<std::uint32_t>> by_size;
        for (std::uint32_t f : faces) by_size[std::popcount(f)].push_back(f);
        std::map<std::uint32_t, int> pos;
        for (auto& [k, list] : by_size) {
            std::sort(list.begin(), list.end());
            for (size_t c = 0; c < list.size(); ++c) pos[list[c]] = static_cast<int>(c);
        }
        auto dims = [&](int k) -> int {
            const auto it = by_size.find(k);
            return it == by_size.end() ? 0 : static_cast<int>(it->second.size());
        };
        auto matrix_d = [&](int k) -> IntMatrix {
            IntMatrix mat(dims(k - 1), dims(k));
            const auto it = by_size.find(k);
            if (it == by_size.end()) return mat;
            for (size_t c = 0; c < it->second.size(); ++c) {
                const std::uint32_t f = it->second[c];
                for (int t = 0; t < m; ++t) {
                    if (!(f & (1u << t))) continue;
                    const std::uint32_t sub = f & ~(1u << t);
                    // the entry survives scalarization iff the sub-face kept
                    // the same lcm, i.e. landed in this very group
                    const auto p = pos.find(sub);
                    if (p == pos.end()) continue;
                    mat.at(p->second, static_cast<int>(c)) = sign_of_drop(f, t);
                }
            }
            return mat;
        };
        for (const auto& [k, list] : by_size) {
            const int h = homology_dimension(matrix_d(k), matrix_d(k + 1));
            if (h > 0) table.entries[{k, degree}] += h;
        }
    }
    return table;
}

BettiTable koszul_betti(std::span<const Monomial> gens, int n) {
    require_minimal(gens);
    BettiTable table;
    if (gens.empty()) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    const MembershipBox box = build_membership_box(gens, n);
    std::vector<int> mu(static_cast<size_t>(n), 0);
    while (true) {
        const size_t mu_flat = box.flat(mu);
        const int degree = std::accumulate(mu.begin(), mu.end(), 0);
        // strands outside the ideal are exact (full Koszul strands)
        if (box.in_ideal[mu_flat] || degree == 0) {
            unsigned supp = 0;
            for (int i = 0; i < n; ++i)
                if (mu[static_cast<size_t>(i)] > 0) supp |= 1u << i;
            const int s = std::popcount(supp);
            // cells alive at mu: subsets sigma of the support with
            // x^(mu - sigma) outside the ideal
            std::vector<std::vector<unsigned>> bases(static_cast<size_t>(s) + 1);
            std::vector<int> pos(size_t{1} << n, -1);
            for (unsigned sigma = supp;; sigma = (sigma - 1) & supp) {
                size_t off = mu_flat;
                for (int i = 0; i < n; ++i)
                    if (sigma & (1u << i)) off -= box.stride[static_cast<size_t>(i)];
                if (!box.in_ideal[off]) {
                    auto& list = bases[static_cast<size_t>(std::popcount(sigma))];
                    pos[sigma] = static_cast<int>(list.size());
                    list.push_back(sigma);
                }
                if (sigma == 0) break;
            }
            auto matrix_d = [&](int i) -> IntMatrix {
                const int dlo = (i >= 1 && i - 1 <= s) ? static_cast<int>(bases[static_cast<size_t>(i) - 1].size()) : 0;
                const int dhi = (i >= 0 && i <= s) ? static_cast<int>(bases[static_cast<size_t>(i)].size()) : 0;
                IntMatrix mat(dlo, dhi);
                if (i < 1 || i > s) return mat;
                const auto& cols = bases[static_cast<size_t>(i)];
                for (size_t c = 0; c < cols.size(); ++c) {
                    const unsigned sigma = cols[c];
                    for (int v = 0; v < n; ++v) {
                        if (!(sigma & (1u << v))) continue;
                        const unsigned tau = sigma & ~(1u << v);
                        if (pos[tau] < 0) continue;
                        mat.at(pos[tau], static_cast<int>(c)) = sign_of_drop(sigma, v);
                    }
                }
                return mat;
            };
            for (int i = 0; i <= s; ++i) {
                if (bases[static_cast<size_t>(i)].empty()) continue;
                const int h = homology_dimension(matrix_d(i), matrix_d(i + 1));
                if (h > 0) table.entries[{i, degree}] += h;
            }
        }
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++mu[static_cast<size_t>(i)] <= box.limit[static_cast<size_t>(i)]) break;
            mu[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return table;
}

std::vector<std::vector<int>> minimal_primes(std::span<const Monomial> gens, int n) {
    if (gens.empty()) throw argument_error("minimal primes need a nonempty generating set");
    require_no_unit(gens);
    if (n > 24) throw capacity_error("too many variables for transversal enumeration");
    std::vector<unsigned> supports;
    supports.reserve(gens.size());
    for (const Monomial& g : gens) {
        unsigned s = 0;
        for (int i = 0; i < n; ++i)
            if (g.e[static_cast<size_t>(i)] > 0) s |= 1u << i;
        supports.push_back(s);
    }
    auto transversal = [&](unsigned set) {
        for (unsigned s : supports)
            if (!(s & set)) return false;
        return true;
    };
    std::vector<std::vector<int>> out;
    for (unsigned set = 0; set < (1u << n); ++set) {
        if (!transversal(set)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((set & (1u << i)) && transversal(set & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (set & (1u << i)) vars.push_back(i + 1);
        out.push_back(std::move(vars));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

void k_poly_walk(std::span<const Monomial> gens, size_t idx, std::vector<int>& l, int sign,
                 std::vector<long long>& coeff) {
    if (idx == gens.size()) {
        const int deg = std::accumulate(l.begin(), l.end(), 0);
        if (static_cast<size_t>(deg) >= coeff.size()) coeff.resize(static_cast<size_t>(deg) + 1, 0);
        coeff[static_cast<size_t>(deg)] += sign;
        return;
    }
    k_poly_walk(gens, idx + 1, l, sign, coeff);
    std::vector<int> saved = l;
    for (size_t k = 0; k < l.size(); ++k)
        l[k] = std::max(l[k], gens[idx].e[k]);
    k_poly_walk(gens, idx + 1, l, -sign, coeff);
    l = std::move(saved);
}

} // namespace

IntPoly k_polynomial(std::span<const Monomial> gens, int n, int cap) {
    if (static_cast<int>(gens.size()) > cap)
        throw capacity_error("too many generators for subset inclusion-exclusion");
    std::vector<long long> coeff;
    std::vector<int> l(static_cast<size_t>(n), 0);
    k_poly_walk(gens, 0, l, 1, coeff);
    IntPoly p;
    p.c = std::move(coeff);
    p.trim();
    return p;
}

IntPoly k_polynomial_counting(std::span<const Monomial> gens, int n) {
    require_no_unit(gens);
    if (gens.empty()) return IntPoly::one();
    const MembershipBox box = build_membership_box(gens, n);
    IntPoly p;
    std::vector<int> mu(static_cast<size_t>(n), 0);
    while (true) {
        const size_t mu_flat = box.flat(mu);
        const int degree = std::accumulate(mu.begin(), mu.end(), 0);
        if (box.in_ideal[mu_flat] || degree == 0) {
            unsigned supp = 0;
            for (int i = 0; i < n; ++i)
                if (mu[static_cast<size_t>(i)] > 0) supp |= 1u << i;
            long long chi = 0;
            for (unsigned sigma = supp;; sigma = (sigma - 1) & supp) {
                size_t off = mu_flat;
                for (int i = 0; i < n; ++i)
                    if (sigma & (1u << i)) off -= box.stride[static_cast<size_t>(i)];
                if (!box.in_ideal[off]) chi += (std::popcount(sigma) % 2 == 0) ? 1 : -1;
                if (sigma == 0) break;
            }
            if (chi != 0) p += IntPoly::term(chi, degree);
        }
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++mu[static_cast<size_t>(i)] <= box.limit[static_cast<size_t>(i)]) break;
            mu[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return p;
}

DepthDim oracle_depth_dim(const BettiTable& betti, std::span<const Monomial> gens, int n) {
    DepthDim r;
    r.projdim = betti.proj_dim();
    r.depth = n - r.projdim;
    const auto primes = minimal_primes(gens, n);
    r.dim = n - static_cast<int>(primes.front().size());
    r.cohen_macaulay = (r.depth == r.dim);
    return r;
}

DepthDim oracle_depth_dim(std::span<const Monomial> gens, int n) {
    if (gens.empty()) {
        DepthDim r;
        r.depth = r.dim = n;
        r.projdim = 0;
        r.cohen_macaulay = true;
        return r;
    }
    return oracle_depth_dim(koszul_betti(gens, n), gens, n);
}

std::vector<Monomial> oracle_colon(std::span<const Monomial> prefix, const Monomial& w) {
    std::vector<Monomial> out;
    out.reserve(prefix.size());
    for (const Monomial& p : prefix)
        out.push_back(*quotient(lcm(p, w), w));
    out = minimalize(std::move(out));
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
    // cross-check: x_k lies in the colon iff x_k * w lies in (prefix)
    const int n = w.nvars();
    for (int k = 1; k <= n; ++k) {
        const Monomial xkw = product(w, variable(n, k));
        bool member = false;
        for (const Monomial& p : prefix)
            if (divides(p, xkw)) {
                member = true;
                break;
            }
        bool listed = false;
        for (const Monomial& g : out)
            if (divides(g, variable(n, k))) {
                listed = true;
                break;
            }
        if (member != listed)
            throw state_error("colon computations disagree on x" + std::to_string(k));
    }
    return out;
}

const Monomial& oracle_g(std::span<const Monomial> order, const Monomial& m) {
    for (size_t j = 1; j <= order.size(); ++j) {
        bool inside = false;
        for (size_t i = 0; i < j; ++i)
            if (divides(order[i], m)) {
                inside = true;
                break;
            }
        if (inside) return order[j - 1];
    }
    throw argument_error("monomial lies outside the ideal");
}

} // namespace lexseg
