#pragma once

#include <vector>

#include "rational.hpp"
#include "schur_weyl.hpp"
#include "tableaux.hpp"

namespace haarint::weingarten {

using schur_weyl::IndexTuple;
using tableaux::Permutation;

inline constexpr int kDefaultOracleCap = 5;

// All of S_d in ascending lexicographic order of image words.
const std::vector<Permutation>& permutation_order(int d);

// Gram matrix G(sigma, tau) = n^{cycles(sigma^-1 tau)} over the fixed
// permutation order; integer entries.
std::vector<std::vector<Integer>> gram_matrix(int d, long n);

// Exact inverse of the Gram matrix by fraction-free elimination; requires
// n >= d so the matrix is invertible.  Cached per (d, n).
const std::vector<std::vector<Rational>>& weingarten_matrix(int d, long n,
                                                            int oracle_cap = kDefaultOracleCap);

// Monomial moment by double sum over permutation pairs matching the index
// deltas, weighted by Weingarten matrix entries.
Rational wg_moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                   const IndexTuple& l, long n, int oracle_cap = kDefaultOracleCap);

}  // namespace haarint::weingarten
