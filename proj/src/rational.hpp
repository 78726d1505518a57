#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace haarint {

using Rational = mpq_class;
using Integer = mpz_class;

// Errors on inputs that exceed the configured size caps.  Validation
// failures use std::invalid_argument, math-domain failures std::domain_error.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// The two argument mpq_class constructor keeps num/den as given; this always
// reduces, so 2/6 and 1/3 compare equal.
inline Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// n (n+1) ... (n+d-1)
inline Rational rising_factorial(const Rational& n, int d) {
  Rational r = 1;
  for (int i = 0; i < d; ++i) r *= n + i;
  return r;
}

}  // namespace haarint
