#pragma once

#include <vector>

#include "lexseg/errors.hpp"

namespace lexseg {

// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Rank over the prime field with p = 2^31 - 1. Never exceeds the rational
// rank, so a zero mod-p homology certifies zero rational homology.
int rank_mod_p(const IntMatrix& m);

// Rank over the rationals: fraction-free elimination in 64-bit words with an
// arbitrary-precision retry when intermediate values overflow.
int rank_exact(const IntMatrix& m);

// Exact dimension of ker(out) / im(in) for a complex piece
//   . --in--> F --out--> .
// where F has dimension out.cols == in.rows. Fast path: if the mod-p
// dimension is zero the rational one is too; otherwise both ranks are
// recomputed exactly.
int homology_dimension(const IntMatrix& out_map, const IntMatrix& in_map);

} // namespace lexseg
