// Dense exact linear algebra over Z and Q at desk scale: lower-triangular row
// HNF, fraction-free determinants, triangular adjugates, and kernels mod q.
#pragma once

#include "radix/ints.hpp"

#include <vector>

namespace radix {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

// Canonical lower-triangular row HNF of the row span. Pivot of the row
// returned at index j sits in column j with positive value; entries below a
// pivot are reduced into [0, pivot). Returns an n x n matrix for a full-rank
// span, throws not_sublattice("not full rank") otherwise.
IMat hnf_lower(IMat rows, std::size_t ncols);

// Echelon variant for spans of any rank: row i has its pivot in pivot_col[i],
// pivot columns strictly decreasing is NOT guaranteed; rows come out sorted by
// pivot column. Entries in a pivot column above/below other pivots reduced.
struct Echelon {
    IMat rows;
    std::vector<std::size_t> pivot_col;
};
Echelon hnf_echelon(IMat rows, std::size_t ncols);

Int det_bareiss(IMat a);

// For lower-triangular H with nonzero diagonal: returns (M, d) with
// d = prod(diag) = det(H) and M = d * H^{-1} (the adjugate), all integral.
std::pair<IMat, Int> tri_adjugate(const IMat& h);

IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transpose(const IMat& a);

// Basis of { x : x * A = 0 mod q } as rows (A given as rows; x row vector).
IMat left_kernel_mod(const IMat& a, const Int& q);

}  // namespace radix
