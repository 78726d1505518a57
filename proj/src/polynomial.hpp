#pragma once

#include <vector>

#include "rational.hpp"

namespace haarint::poly {

// Dense polynomial in the symbol n, coefficients ascending by power,
// no trailing zeros.  The zero polynomial has no coefficients.
class PolynomialInN {
 public:
  PolynomialInN() = default;
  explicit PolynomialInN(std::vector<Rational> coeffs);
  static PolynomialInN constant(const Rational& c);
  static PolynomialInN monomial(const Rational& c, int power);
  // The polynomial n.
  static PolynomialInN variable();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;

  PolynomialInN operator+(const PolynomialInN& o) const;
  PolynomialInN operator-(const PolynomialInN& o) const;
  PolynomialInN operator*(const PolynomialInN& o) const;
  PolynomialInN operator*(const Rational& c) const;
  PolynomialInN operator-() const;
  bool operator==(const PolynomialInN& o) const { return coeffs_ == o.coeffs_; }

  Rational evaluate(const Rational& n) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder of a by b (b nonzero).
std::pair<PolynomialInN, PolynomialInN> divmod(const PolynomialInN& a, const PolynomialInN& b);
// Monic gcd; gcd(0, 0) = 0.
PolynomialInN gcd(const PolynomialInN& a, const PolynomialInN& b);

// Reduced quotient of polynomials in n; the denominator is kept monic.
class RationalFunctionInN {
 public:
  RationalFunctionInN() : den_(PolynomialInN::constant(1)) {}
  RationalFunctionInN(PolynomialInN num, PolynomialInN den);
  static RationalFunctionInN constant(const Rational& c);

  const PolynomialInN& numerator() const { return num_; }
  const PolynomialInN& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionInN operator+(const RationalFunctionInN& o) const;
  RationalFunctionInN operator-(const RationalFunctionInN& o) const;
  RationalFunctionInN operator*(const RationalFunctionInN& o) const;
  bool operator==(const RationalFunctionInN& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Throws std::domain_error when the denominator vanishes at n.
  Rational evaluate(const Rational& n) const;

 private:
  void reduce();
  PolynomialInN num_, den_;
};

}  // namespace haarint::poly
