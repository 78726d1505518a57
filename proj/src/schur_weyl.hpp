#pragma once

#include <vector>

#include "algebra.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "tableaux.hpp"

namespace haarint::schur_weyl {

using algebra::AlgebraElement;
using poly::PolynomialInN;
using tableaux::Permutation;

// Multi-index (i_1,...,i_d) with 1-based entries.
using IndexTuple = std::vector<int>;

void validate_index_tuple(const IndexTuple& idx, int d, long n);

// Place permutation action on tensor slots: (sigma I)_b = I_{sigma^-1(b)}.
IndexTuple act_on_index(const Permutation& sigma, const IndexTuple& idx);

// <x e_L, e_J> where e_M is the elementary tensor of standard basis
// vectors: the sum of coefficients of x over permutations sending L to J.
// Independent of the ambient dimension n.
Rational pair_with_elementary(const AlgebraElement& x, const IndexTuple& j,
                              const IndexTuple& l);

// <x v, y v> summed over the full elementary basis, as a polynomial in the
// ambient dimension: sum over term pairs of n^{cycles(sigma^-1 tau)}.
PolynomialInN gram_pairing_poly(const AlgebraElement& x, const AlgebraElement& y);

// gram_pairing_poly(x, x) for a matrix unit, cached per (shape, row, col).
const PolynomialInN& unit_norm_poly(const algebra::MatrixUnit& unit);

}  // namespace haarint::schur_weyl
