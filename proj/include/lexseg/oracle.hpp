#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lexseg/monomial.hpp"
#include "lexseg/poly.hpp"

namespace lexseg {

// Betti numbers of S/I indexed by (homological position i, internal degree j).
// beta_{0,0} = 1 and beta_1 counts minimal generators.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long beta(int i, int j) const;
    int proj_dim() const;         // largest i with a nonzero entry
    long long total(int i) const; // sum of beta_{i,j} over j
    // Sum of (-1)^i beta_{i,j} t^j; equals the K-polynomial of S/I.
    IntPoly alternating_sum() const;
    // True when every entry with i >= 1 sits at degree j = gen_degree + i - 1.
    bool concentrated_linear(int gen_degree) const;

    bool operator==(const BettiTable&) const = default;
};

// Betti numbers from the Taylor complex: one face per subset of the
// generators, scalarized per multidegree. Requires a minimal generating set
// and at most cap generators (capacity_error beyond, the complex has 2^m faces).
BettiTable taylor_betti(std::span<const Monomial> gens, int n, int cap = 22);

// Betti numbers from Koszul homology, computed one multidegree at a time.
// Slower per cell but independent of the generator count, so it scales to
// segments far beyond the Taylor cap.
BettiTable koszul_betti(std::span<const Monomial> gens, int n);

// Minimal transversals of the generator supports = minimal primes of I,
// each given as an ascending list of variable indices. Sorted by size then
// lexicographically. Requires nonempty gens, none equal to 1.
std::vector<std::vector<int>> minimal_primes(std::span<const Monomial> gens, int n);

// Inclusion-exclusion numerator of the Hilbert series of S/I:
// sum over subsets F of gens of (-1)^|F| t^{deg lcm F}. capacity_error when
// |gens| exceeds cap.
IntPoly k_polynomial(std::span<const Monomial> gens, int n, int cap = 22);

// Same polynomial by alternating cell counts of the Koszul strands; no cap.
IntPoly k_polynomial_counting(std::span<const Monomial> gens, int n);

struct DepthDim {
    int depth = 0;
    int dim = 0;
    int projdim = 0;
    bool cohen_macaulay = false;
};

// depth/dim/projdim of S/I from homology ranks and minimal primes:
// projdim = max i with beta_i != 0, depth = n - projdim, dim = n - least
// cover size, CM iff depth == dim.
DepthDim oracle_depth_dim(std::span<const Monomial> gens, int n);
// Same, reusing an already computed Betti table (gens must be nonempty).
DepthDim oracle_depth_dim(const BettiTable& betti, std::span<const Monomial> gens, int n);

// Colon ideal generators by the lcm route with an internal cross-check of
// variable membership; sorted lex-descending. Kept separate from the
// quotients module on purpose.
std::vector<Monomial> oracle_colon(std::span<const Monomial> prefix, const Monomial& w);

// Decomposition by the definition: the smallest j with m in (order[0..j-1]).
const Monomial& oracle_g(std::span<const Monomial> order, const Monomial& m);

} // namespace lexseg
