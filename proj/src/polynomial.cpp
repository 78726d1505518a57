#include "polynomial.hpp"

#include <stdexcept>

namespace haarint::poly {

PolynomialInN::PolynomialInN(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void PolynomialInN::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolynomialInN PolynomialInN::constant(const Rational& c) {
  return PolynomialInN(std::vector<Rational>{c});
}

PolynomialInN PolynomialInN::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return PolynomialInN(std::move(v));
}

PolynomialInN PolynomialInN::variable() { return monomial(1, 1); }

Rational PolynomialInN::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

Rational PolynomialInN::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

PolynomialInN PolynomialInN::operator+(const PolynomialInN& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return PolynomialInN(std::move(v));
}

PolynomialInN PolynomialInN::operator-(const PolynomialInN& o) const {
  return *this + (-o);
}

PolynomialInN PolynomialInN::operator-() const {
  auto v = coeffs_;
  for (auto& c : v) c = -c;
  return PolynomialInN(std::move(v));
}

PolynomialInN PolynomialInN::operator*(const PolynomialInN& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return PolynomialInN(std::move(v));
}

PolynomialInN PolynomialInN::operator*(const Rational& c) const {
  auto v = coeffs_;
  for (auto& x : v) x *= c;
  return PolynomialInN(std::move(v));
}

Rational PolynomialInN::evaluate(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::pair<PolynomialInN, PolynomialInN> divmod(const PolynomialInN& a, const PolynomialInN& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  PolynomialInN rem = a;
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading_coefficient() / b.leading_coefficient();
    q[shift] = factor;
    rem = rem - b * PolynomialInN::monomial(factor, shift);
  }
  return {PolynomialInN(std::move(q)), rem};
}

PolynomialInN gcd(const PolynomialInN& a, const PolynomialInN& b) {
  PolynomialInN x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading_coefficient());
}

RationalFunctionInN::RationalFunctionInN(PolynomialInN num, PolynomialInN den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RationalFunctionInN::reduce() {
  if (num_.is_zero()) {
    den_ = PolynomialInN::constant(1);
    return;
  }
  PolynomialInN g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunctionInN RationalFunctionInN::constant(const Rational& c) {
  return RationalFunctionInN(PolynomialInN::constant(c), PolynomialInN::constant(1));
}

RationalFunctionInN RationalFunctionInN::operator+(const RationalFunctionInN& o) const {
  return RationalFunctionInN(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionInN RationalFunctionInN::operator-(const RationalFunctionInN& o) const {
  return RationalFunctionInN(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionInN RationalFunctionInN::operator*(const RationalFunctionInN& o) const {
  return RationalFunctionInN(num_ * o.num_, den_ * o.den_);
}

Rational RationalFunctionInN::evaluate(const Rational& n) const {
  Rational d = den_.evaluate(n);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(n) / d;
}

}  // namespace haarint::poly
