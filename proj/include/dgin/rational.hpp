#ifndef DGIN_RATIONAL_HPP
#define DGIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dgin {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical textual form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Exact binomial coefficient; zero for b < 0 or a < b (a may be negative
/// only through the polynomial identities, callers pass a >= 0).
inline Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || a < b) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

} // namespace dgin

#endif
