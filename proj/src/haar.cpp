#include "haar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "algebra.hpp"
#include "tableaux.hpp"

namespace haarint::moments {

using algebra::MatrixUnit;
using poly::PolynomialInN;
using tableaux::YoungDiagram;

int effective_length(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                     const IndexTuple& l) {
  int row_side = std::max(*std::max_element(i.begin(), i.end()),
                          *std::max_element(k.begin(), k.end()));
  int col_side = std::max(*std::max_element(j.begin(), j.end()),
                          *std::max_element(l.begin(), l.end()));
  return std::min(row_side, col_side);
}

bool same_type(const IndexTuple& j, const IndexTuple& l) {
  auto a = j, b = l;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

void validate_all(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                  const IndexTuple& l, long n, int degree_cap) {
  int d = static_cast<int>(i.size());
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d > degree_cap)
    throw capacity_error("degree " + std::to_string(d) + " exceeds cap " +
                         std::to_string(degree_cap));
  schur_weyl::validate_index_tuple(i, d, n);
  schur_weyl::validate_index_tuple(j, d, n);
  schur_weyl::validate_index_tuple(k, d, n);
  schur_weyl::validate_index_tuple(l, d, n);
}

// Per-shape sum of pair(unit, j, l) * pair(unit, i, k) / |unit|^2(n), with
// the numerator pairings independent of n.
struct ShapeContribution {
  Rational row_col_product;
  const PolynomialInN* norm;
};

std::vector<ShapeContribution> shape_terms(const YoungDiagram& shape, const IndexTuple& i,
                                           const IndexTuple& j, const IndexTuple& k,
                                           const IndexTuple& l) {
  std::vector<ShapeContribution> out;
  for (const MatrixUnit& unit : algebra::matrix_units(shape)) {
    Rational a = schur_weyl::pair_with_elementary(unit.element, j, l);
    if (a == 0) continue;
    Rational b = schur_weyl::pair_with_elementary(unit.element, i, k);
    if (b == 0) continue;
    out.push_back({a * b, &schur_weyl::unit_norm_poly(unit)});
  }
  return out;
}

}  // namespace

Rational moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                const IndexTuple& l, long n, int degree_cap) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  validate_all(i, j, k, l, n, degree_cap);
  int d = static_cast<int>(i.size());
  int gate = std::min(static_cast<long>(effective_length(i, j, k, l)), n);
  Rational acc = 0;
  for (const auto& shape : tableaux::partitions(d, degree_cap)) {
    if (shape.length() > gate) continue;
    for (const auto& term : shape_terms(shape, i, j, k, l))
      acc += term.row_col_product / term.norm->evaluate(n);
  }
  return acc;
}

std::vector<SymbolicBranch> moment_symbolic(const IndexTuple& i, const IndexTuple& j,
                                            const IndexTuple& k, const IndexTuple& l,
                                            int degree_cap) {
  validate_all(i, j, k, l, 0, degree_cap);
  int d = static_cast<int>(i.size());
  int eff = effective_length(i, j, k, l);
  auto shapes = tableaux::partitions(d, degree_cap);
  std::vector<std::vector<ShapeContribution>> terms;
  terms.reserve(shapes.size());
  for (const auto& shape : shapes) terms.push_back(shape_terms(shape, i, j, k, l));
  std::vector<SymbolicBranch> out;
  for (int p = 1; p <= d; ++p) {
    int gate = std::min(eff, p);
    RationalFunctionInN sum;
    for (size_t s = 0; s < shapes.size(); ++s) {
      if (shapes[s].length() > gate) continue;
      for (const auto& term : terms[s])
        sum = sum + RationalFunctionInN(PolynomialInN::constant(term.row_col_product),
                                        *term.norm);
    }
    out.push_back({p, std::move(sum)});
  }
  return out;
}

Rational one_row_moment(const IndexTuple& j, const IndexTuple& l, long n, int degree_cap) {
  int d = static_cast<int>(j.size());
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (d > degree_cap)
    throw capacity_error("degree " + std::to_string(d) + " exceeds cap " +
                         std::to_string(degree_cap));
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  schur_weyl::validate_index_tuple(j, d, n);
  schur_weyl::validate_index_tuple(l, d, n);
  if (!same_type(j, l)) return 0;
  std::map<int, int> multiplicity;
  for (int v : j) ++multiplicity[v];
  Rational num = 1;
  for (const auto& [v, m] : multiplicity) num *= Rational(factorial(m));
  return num / rising_factorial(Rational(n), d);
}

}  // namespace haarint::moments
