#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "haar.hpp"

using namespace haarint;
using poly::PolynomialInN;
using poly::RationalFunctionInN;
using schur_weyl::IndexTuple;

namespace {

IndexTuple ones(int d) { return IndexTuple(d, 1); }

std::vector<IndexTuple> tuples_up_to(int d, int top) {
  std::vector<IndexTuple> out;
  for (int code = 0; code < dense::int_pow(top, d); ++code)
    out.push_back(dense::decode(code, top, d));
  return out;
}

}  // namespace

TEST_CASE("effective length and type helpers") {
  CHECK(moments::effective_length({1, 2}, {1, 1}, {2, 1}, {1, 1}) == 1);
  CHECK(moments::effective_length({1, 2}, {3, 1}, {2, 1}, {1, 1}) == 2);
  CHECK(moments::effective_length({5, 5}, {4, 4}, {5, 5}, {4, 4}) == 4);
  CHECK(moments::same_type({1, 2, 1}, {2, 1, 1}));
  CHECK(!moments::same_type({1, 2, 2}, {2, 1, 1}));
}

TEST_CASE("first entry moments across sizes") {
  for (long n = 1; n <= 8; ++n) {
    CHECK(moments::moment({1}, {1}, {1}, {1}, n) == frac(1, n));
    CHECK(moments::moment(ones(2), ones(2), ones(2), ones(2), n) ==
          frac(2, n * (n + 1)));
  }
  CHECK(moments::moment(ones(2), ones(2), ones(2), ones(2), 3) == Rational(1, 6));
}

TEST_CASE("column moment from the worked example") {
  for (long n = 2; n <= 8; ++n)
    CHECK(moments::moment({1, 2}, {1, 1}, {1, 2}, {1, 1}, n) == frac(1, n * (n + 1)));
}

TEST_CASE("moment input validation") {
  CHECK_THROWS_AS(moments::moment({1}, {1}, {1}, {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(moments::moment({1, 2}, {1}, {1, 2}, {1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(moments::moment({4}, {1}, {1}, {1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(moments::moment(ones(7), ones(7), ones(7), ones(7), 9), capacity_error);
  CHECK_THROWS_AS(moments::moment(ones(3), ones(3), ones(3), ones(3), 9, 2), capacity_error);
}

TEST_CASE("moments are symmetric under conjugating the monomial") {
  std::mt19937 rng(71);
  for (int d = 2; d <= 4; ++d)
    for (long n : {2L, 4L}) {
      std::uniform_int_distribution<int> pick(1, static_cast<int>(n));
      for (int trial = 0; trial < 25; ++trial) {
        IndexTuple i(d), j(d), k(d), l(d);
        for (int a = 0; a < d; ++a) {
          i[a] = pick(rng);
          j[a] = pick(rng);
          k[a] = pick(rng);
          l[a] = pick(rng);
        }
        CHECK(moments::moment(i, j, k, l, n) == moments::moment(k, l, i, j, n));
      }
    }
}

TEST_CASE("moments are invariant under relabeling rows and columns") {
  std::mt19937 rng(73);
  long n = 4;
  std::uniform_int_distribution<int> pick(1, static_cast<int>(n));
  auto relabel = [](const IndexTuple& t, const std::vector<int>& map) {
    IndexTuple out(t.size());
    for (size_t a = 0; a < t.size(); ++a) out[a] = map[t[a] - 1];
    return out;
  };
  std::vector<int> row_map{3, 1, 4, 2};
  std::vector<int> col_map{2, 4, 1, 3};
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + trial % 4;
    IndexTuple i(d), j(d), k(d), l(d);
    for (int a = 0; a < d; ++a) {
      i[a] = pick(rng);
      j[a] = pick(rng);
      k[a] = pick(rng);
      l[a] = pick(rng);
    }
    CHECK(moments::moment(i, j, k, l, n) ==
          moments::moment(relabel(i, row_map), relabel(j, col_map), relabel(k, row_map),
                          relabel(l, col_map), n));
  }
}

TEST_CASE("unit expansion agrees with the dense projection everywhere") {
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& j : tuples_up_to(d, n))
        for (const auto& l : tuples_up_to(d, n))
          for (const auto& i : tuples_up_to(d, n))
            for (const auto& k : tuples_up_to(d, n))
              CHECK(moments::moment(i, j, k, l, n) == dense::dense_moment(i, j, k, l, n));
}

TEST_CASE("unit expansion agrees with the dense projection at degree three") {
  std::mt19937 rng(79);
  for (int n = 1; n <= 3; ++n) {
    std::uniform_int_distribution<int> pick(1, n);
    for (int trial = 0; trial < 50; ++trial) {
      IndexTuple i(3), j(3), k(3), l(3);
      for (int a = 0; a < 3; ++a) {
        i[a] = pick(rng);
        j[a] = pick(rng);
        k[a] = pick(rng);
        l[a] = pick(rng);
      }
      CHECK(moments::moment(i, j, k, l, n) == dense::dense_moment(i, j, k, l, n));
    }
  }
}

TEST_CASE("small sizes gate shapes by the effective length") {
  CHECK(moments::moment({1, 2}, {1, 2}, {1, 2}, {1, 2}, 2) == Rational(1, 3));
  CHECK(moments::moment({1, 1}, {1, 1}, {1, 1}, {1, 2}, 2) == 0);
  CHECK(moments::moment(ones(3), ones(3), ones(3), ones(3), 1) == 1);
  CHECK(moments::moment({1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {1, 2, 2}, 2) ==
        dense::dense_moment({1, 2, 2}, {2, 1, 2}, {2, 2, 1}, {1, 2, 2}, 2));
}

TEST_CASE("one row law gives factorial ratios") {
  for (long n = 1; n <= 6; ++n) {
    CHECK(moments::one_row_moment({1}, {1}, n) == frac(1, n));
    CHECK(moments::one_row_moment({1, 1}, {1, 1}, n) == frac(2, n * (n + 1)));
    if (n >= 2) {
      CHECK(moments::one_row_moment({1, 2}, {1, 2}, n) == frac(1, n * (n + 1)));
      CHECK(moments::one_row_moment({1, 2}, {2, 1}, n) == frac(1, n * (n + 1)));
      CHECK(moments::one_row_moment({1, 1, 2}, {1, 2, 1}, n) ==
            frac(2, n * (n + 1) * (n + 2)));
    }
  }
  CHECK(moments::one_row_moment({1, 1}, {1, 2}, 5) == 0);
  CHECK(moments::one_row_moment({3, 3, 3}, {3, 3, 3}, 4) == frac(6, 4 * 5 * 6));
}

TEST_CASE("one row law validation") {
  CHECK_THROWS_AS(moments::one_row_moment({1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}, 8),
                  capacity_error);
  CHECK_THROWS_AS(moments::one_row_moment({1}, {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(moments::one_row_moment({1, 5}, {5, 1}, 4), std::invalid_argument);
}

TEST_CASE("one row law equals the general moment on a single row") {
  for (int d = 1; d <= 4; ++d)
    for (long n = 1; n <= 6; ++n) {
      int top = std::min<long>(4, n);
      for (const auto& j : tuples_up_to(d, top))
        for (const auto& l : tuples_up_to(d, top))
          CHECK(moments::one_row_moment(j, l, n) ==
                moments::moment(ones(d), j, ones(d), l, n));
    }
}

TEST_CASE("symbolic branches cover every size") {
  auto branches = moments::moment_symbolic(ones(2), ones(2), ones(2), ones(2));
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].min_n == 1);
  CHECK(branches[1].min_n == 2);
  RationalFunctionInN expected(PolynomialInN::constant(2),
                               PolynomialInN({Rational(0), Rational(1), Rational(1)}));
  CHECK(branches[0].value == expected);
  CHECK(branches[1].value == expected);
}

TEST_CASE("symbolic branches split when off diagonal shapes enter") {
  auto branches = moments::moment_symbolic({1, 2}, {1, 2}, {1, 2}, {1, 2});
  REQUIRE(branches.size() == 2);
  RationalFunctionInN one_row(PolynomialInN::constant(1),
                              PolynomialInN({Rational(0), Rational(2), Rational(2)}));
  CHECK(branches[0].value == one_row);
  RationalFunctionInN both(PolynomialInN::constant(1),
                           PolynomialInN({Rational(-1), Rational(0), Rational(1)}));
  CHECK(branches[1].value == both);
}

TEST_CASE("symbolic branches evaluate to the per size moments") {
  std::mt19937 rng(83);
  for (int d = 1; d <= 4; ++d) {
    std::uniform_int_distribution<int> pick(1, d);
    for (int trial = 0; trial < 20; ++trial) {
      IndexTuple i(d), j(d), k(d), l(d);
      for (int a = 0; a < d; ++a) {
        i[a] = pick(rng);
        j[a] = pick(rng);
        k[a] = pick(rng);
        l[a] = pick(rng);
      }
      auto branches = moments::moment_symbolic(i, j, k, l);
      REQUIRE(branches.size() == static_cast<size_t>(d));
      int top = 1;
      for (const auto* t : {&i, &j, &k, &l})
        for (int v : *t) top = std::max(top, v);
      for (long n = top; n <= 8; ++n) {
        int p = static_cast<int>(std::min<long>(n, d));
        CHECK(branches[p - 1].value.evaluate(n) == moments::moment(i, j, k, l, n));
      }
    }
  }
}
