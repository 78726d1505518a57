#pragma once

#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "schur_weyl.hpp"

namespace haarint::moments {

using poly::RationalFunctionInN;
using schur_weyl::IndexTuple;

// Largest index value actually used on each side of the monomial; shapes
// longer than min of the two sides pair to zero.
int effective_length(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                     const IndexTuple& l);

// Whether j and l coincide as multisets.
bool same_type(const IndexTuple& j, const IndexTuple& l);

// E[u_{i1 j1} ... u_{id jd} conj(u_{k1 l1}) ... conj(u_{kd ld})] over the
// unitary group of size n, by matrix unit expansion.
Rational moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                const IndexTuple& l, long n,
                int degree_cap = tableaux::kDefaultDegreeCap);

// One branch of the symbolic moment: valid for all n with min(n, d) = min_n.
struct SymbolicBranch {
  int min_n;
  RationalFunctionInN value;
};

// The moment as a function of n, split into branches by min(n, d).
std::vector<SymbolicBranch> moment_symbolic(const IndexTuple& i, const IndexTuple& j,
                                            const IndexTuple& k, const IndexTuple& l,
                                            int degree_cap = tableaux::kDefaultDegreeCap);

// Closed form for moments of a single row: products of entry powers from
// one row of the matrix against their conjugates.
Rational one_row_moment(const IndexTuple& j, const IndexTuple& l, long n,
                        int degree_cap = tableaux::kDefaultDegreeCap);

}  // namespace haarint::moments
