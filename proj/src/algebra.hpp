#pragma once

#include <map>
#include <vector>

#include "rational.hpp"
#include "tableaux.hpp"

namespace haarint::algebra {

using tableaux::Permutation;
using tableaux::StandardTableau;
using tableaux::YoungDiagram;

// Element of the rational group algebra of S_d: finitely many permutations
// with nonzero rational coefficients, keyed in image-word order.
class AlgebraElement {
 public:
  explicit AlgebraElement(int degree);
  static AlgebraElement identity(int degree);
  static AlgebraElement from_permutation(const Permutation& p);

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& p) const;
  void add_term(const Permutation& p, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  // Convolution product.
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Rational& c) const;
  bool operator==(const AlgebraElement& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  // Coefficients transported to inverse permutations.
  AlgebraElement adjoint() const;
  // Normalized regular trace: the coefficient of the identity.
  Rational trace() const;
  // tr(adjoint(*this) * o) computed without forming the product.
  Rational trace_inner(const AlgebraElement& o) const;
  // Same element inside the algebra of S_target, new points fixed.
  AlgebraElement embedded(int target_degree) const;
  // Drops the terms moving the top point, then reindexes down one degree;
  // the conditional expectation onto the subalgebra of S_{d-1}.
  AlgebraElement restricted_expectation() const;

 private:
  int degree_;
  std::map<Permutation, Rational> terms_;
};

// X_i = (1,i) + (2,i) + ... + (i-1,i) in S_d; X_1 = 0.
AlgebraElement jucys_murphy(int i, int d);

// Matrix unit data for an ordered pair (row tableau t, column tableau s):
// element = E_t pi E_s with (pi)(s) = t, together with the squared
// normalization constant c^2 relating it to the orthonormal unit.
struct MatrixUnit {
  StandardTableau row;
  StandardTableau col;
  AlgebraElement element;
  Rational c_squared;
};

// Minimal projection onto the seminormal basis vector of t (the diagonal
// unit); cached per content vector for the life of the process.
const AlgebraElement& minimal_projection(const StandardTableau& t);

// Product over an admissible path from t to s of r^2/(r^2-1).
Rational normalization_c_squared(const StandardTableau& t, const StandardTableau& s);

MatrixUnit matrix_unit(const StandardTableau& t, const StandardTableau& s);

// All f^2 units of a shape in row-major order over the standard tableau
// enumeration; cached per shape.
const std::vector<MatrixUnit>& matrix_units(const YoungDiagram& shape);

// Coordinates of x in the matrix unit basis, keyed by (shape, row index,
// column index) into the standard enumerations.
struct UnitKey {
  std::vector<int> shape;
  int row;
  int col;
  auto operator<=>(const UnitKey&) const = default;
};
std::map<UnitKey, Rational> decompose(const AlgebraElement& x,
                                      int degree_cap = tableaux::kDefaultDegreeCap);

// Young orthogonal representation of the adjacent transposition s_i on the
// span of standard tableaux of the shape, column t = image of basis vector t.
std::vector<std::vector<double>> young_orthogonal_matrix(const YoungDiagram& shape, int i);

// Representation matrix of an arbitrary permutation, built from a reduced
// word in adjacent transpositions.
std::vector<std::vector<double>> young_orthogonal_representation(const YoungDiagram& shape,
                                                                 const Permutation& p);

}  // namespace haarint::algebra
