#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "schur_weyl.hpp"
#include "weingarten.hpp"

using namespace haarint;
using algebra::AlgebraElement;
using poly::PolynomialInN;
using schur_weyl::IndexTuple;
using tableaux::Permutation;
using tableaux::YoungDiagram;

namespace {

AlgebraElement random_element(int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 5);
  AlgebraElement x(d);
  for (const auto& p : weingarten::permutation_order(d)) {
    int a = num(rng);
    if (a == 0) continue;
    x.add_term(p, Rational(a, den(rng)));
  }
  return x;
}

std::vector<IndexTuple> all_tuples(int d, int n) {
  std::vector<IndexTuple> out;
  for (int code = 0; code < dense::int_pow(n, d); ++code)
    out.push_back(dense::decode(code, n, d));
  return out;
}

}  // namespace

TEST_CASE("index tuple validation") {
  schur_weyl::validate_index_tuple({1, 2, 3}, 3, 3);
  schur_weyl::validate_index_tuple({9, 9}, 2, -1);
  CHECK_THROWS_AS(schur_weyl::validate_index_tuple({1, 2}, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(schur_weyl::validate_index_tuple({0, 1}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(schur_weyl::validate_index_tuple({1, 4}, 2, 3), std::invalid_argument);
}

TEST_CASE("slot action places values by image") {
  Permutation cycle({1, 2, 0});
  CHECK(schur_weyl::act_on_index(cycle, {5, 7, 9}) == IndexTuple{9, 5, 7});
  CHECK(schur_weyl::act_on_index(Permutation::identity(3), {4, 4, 2}) ==
        IndexTuple{4, 4, 2});
  CHECK_THROWS_AS(schur_weyl::act_on_index(cycle, {1, 2}), std::invalid_argument);
}

TEST_CASE("slot action is compatible with composition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(1, 4);
  for (const auto& sigma : weingarten::permutation_order(4))
    for (const auto& tau : weingarten::permutation_order(4)) {
      IndexTuple idx{pick(rng), pick(rng), pick(rng), pick(rng)};
      CHECK(schur_weyl::act_on_index(sigma, schur_weyl::act_on_index(tau, idx)) ==
            schur_weyl::act_on_index(sigma.compose(tau), idx));
    }
}

TEST_CASE("pairing with the identity element is a delta") {
  auto e = AlgebraElement::identity(2);
  CHECK(schur_weyl::pair_with_elementary(e, {1, 2}, {1, 2}) == 1);
  CHECK(schur_weyl::pair_with_elementary(e, {1, 2}, {2, 1}) == 0);
  CHECK_THROWS_AS(schur_weyl::pair_with_elementary(e, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("pairing with the symmetrizer") {
  AlgebraElement sym(2);
  sym.add_term(Permutation::identity(2), Rational(1, 2));
  sym.add_term(Permutation::transposition(2, 1, 2), Rational(1, 2));
  CHECK(schur_weyl::pair_with_elementary(sym, {1, 1}, {1, 1}) == 1);
  CHECK(schur_weyl::pair_with_elementary(sym, {1, 2}, {1, 2}) == Rational(1, 2));
  CHECK(schur_weyl::pair_with_elementary(sym, {2, 1}, {1, 2}) == Rational(1, 2));
  CHECK(schur_weyl::pair_with_elementary(sym, {2, 2}, {1, 2}) == 0);
}

TEST_CASE("pairing matches dense matrix entries") {
  std::mt19937 rng(23);
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n) {
      auto x = random_element(d, rng);
      auto op = dense::element_operator(x, n);
      for (const auto& j : all_tuples(d, n))
        for (const auto& l : all_tuples(d, n))
          CHECK(schur_weyl::pair_with_elementary(x, j, l) ==
                op[dense::encode(j, n)][dense::encode(l, n)]);
    }
}

TEST_CASE("gram pairing of identities counts the full basis") {
  for (int d = 1; d <= 4; ++d) {
    auto e = AlgebraElement::identity(d);
    CHECK(schur_weyl::gram_pairing_poly(e, e) == PolynomialInN::monomial(1, d));
  }
}

TEST_CASE("gram pairing is symmetric and bilinear") {
  std::mt19937 rng(37);
  for (int d = 2; d <= 4; ++d) {
    auto x = random_element(d, rng);
    auto y = random_element(d, rng);
    auto z = random_element(d, rng);
    CHECK(schur_weyl::gram_pairing_poly(x, y) == schur_weyl::gram_pairing_poly(y, x));
    CHECK(schur_weyl::gram_pairing_poly(x + y, z) ==
          schur_weyl::gram_pairing_poly(x, z) + schur_weyl::gram_pairing_poly(y, z));
    CHECK(schur_weyl::gram_pairing_poly(x * Rational(3, 7), z) ==
          schur_weyl::gram_pairing_poly(x, z) * Rational(3, 7));
  }
  CHECK(schur_weyl::gram_pairing_poly(AlgebraElement(3), AlgebraElement(3)).is_zero());
  CHECK_THROWS_AS(
      schur_weyl::gram_pairing_poly(AlgebraElement::identity(2), AlgebraElement::identity(3)),
      std::invalid_argument);
}

TEST_CASE("gram pairing matches dense traces") {
  std::mt19937 rng(41);
  for (int d = 1; d <= 3; ++d) {
    auto x = random_element(d, rng);
    auto y = random_element(d, rng);
    auto poly = schur_weyl::gram_pairing_poly(x, y);
    for (int n = 1; n <= 3; ++n) {
      auto ox = dense::element_operator(x, n);
      auto oy = dense::element_operator(y, n);
      CHECK(poly.evaluate(n) == dense::trace_product(ox, oy));
    }
  }
}

TEST_CASE("projection operator images have schur dimension trace") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& shape : tableaux::partitions(d))
      for (const auto& t : tableaux::standard_tableaux(shape)) {
        const auto& e = algebra::minimal_projection(t);
        auto dim_poly = dense::schur_dimension_poly(shape);
        for (int n = 1; n <= 3; ++n) {
          auto op = dense::element_operator(e, n);
          Rational trace = 0;
          for (size_t r = 0; r < op.size(); ++r) trace += op[r][r];
          CHECK(trace == dim_poly.evaluate(n));
          CHECK(dense::trace_product(op, op) == trace);
        }
      }
}

TEST_CASE("symmetrizer norms from the worked example") {
  auto shape2 = YoungDiagram({2});
  auto shape11 = YoungDiagram({1, 1});
  const auto& sym = algebra::matrix_units(shape2)[0];
  const auto& anti = algebra::matrix_units(shape11)[0];
  CHECK(schur_weyl::unit_norm_poly(sym) ==
        PolynomialInN({Rational(0), Rational(1, 2), Rational(1, 2)}));
  CHECK(schur_weyl::unit_norm_poly(anti) ==
        PolynomialInN({Rational(0), Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("unit norms scale to the schur dimension polynomial") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& shape : tableaux::partitions(d)) {
      auto dim_poly = dense::schur_dimension_poly(shape);
      for (const auto& unit : algebra::matrix_units(shape))
        CHECK(schur_weyl::unit_norm_poly(unit) * unit.c_squared == dim_poly);
    }
}

TEST_CASE("unit norm polynomials are cached by content") {
  const auto& units = algebra::matrix_units(YoungDiagram({2, 1}));
  const auto* first = &schur_weyl::unit_norm_poly(units[1]);
  const auto* second = &schur_weyl::unit_norm_poly(units[1]);
  CHECK(first == second);
}

TEST_CASE("distinct units are orthogonal under the gram pairing") {
  for (int d = 2; d <= 4; ++d) {
    std::vector<const algebra::MatrixUnit*> all;
    for (const auto& shape : tableaux::partitions(d))
      for (const auto& unit : algebra::matrix_units(shape)) all.push_back(&unit);
    for (size_t a = 0; a < all.size(); ++a)
      for (size_t b = 0; b < all.size(); ++b) {
        if (a == b) continue;
        CHECK(schur_weyl::gram_pairing_poly(all[a]->element, all[b]->element).is_zero());
      }
  }
}
