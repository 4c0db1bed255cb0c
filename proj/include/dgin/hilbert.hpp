#ifndef DGIN_HILBERT_HPP
#define DGIN_HILBERT_HPP

#include <string>
#include <vector>

#include "dgin/rational.hpp"

namespace dgin {

/// A numerical polynomial p(t) with rational coefficients that takes
/// integer values at every integer.  Integer-valuedness is enforced at
/// construction via the binomial-basis expansion.
class HilbertPolynomial {
public:
  /// coeffs[k] multiplies t^k; trailing zeros are trimmed.
  explicit HilbertPolynomial(std::vector<Rational> coeffs);

  static HilbertPolynomial constant(long c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Integer evaluate(long t) const;

  bool operator==(const HilbertPolynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const HilbertPolynomial& other) const { return !(*this == other); }

  /// Canonical text, e.g. "7t-5", "3t+2", "t^2+4", "2", "0".
  std::string text() const;

  /// Grammar: terms `<int>`, `t`, `<int>t`, `t^<k>`, `<int>t^<k>` joined
  /// by `+`/`-`.
  static HilbertPolynomial parse(const std::string& text);

private:
  std::vector<Rational> coeffs_; // power basis, ascending; empty = zero
};

/// p(t) = sum of binomial(t + a_i - (i-1), a_i) over i = 1..s with the
/// exponents weakly decreasing; the Gotzmann number of p is s.
struct GotzmannDecomposition {
  std::vector<long> exponents; // a_1 >= a_2 >= ... >= a_s >= 0
  long number() const { return static_cast<long>(exponents.size()); }
};

/// Throws AdmissibilityError when p admits no such decomposition (or the
/// decomposition would exceed the step cap of 10000 terms).
GotzmannDecomposition gotzmann_decompose(const HilbertPolynomial& p);

long gotzmann_number(const HilbertPolynomial& p);

/// binomial(n+t, n) - p(t): the dimension a degree-t slice of an ideal
/// with Hilbert polynomial p must have once t reaches the Gotzmann number.
Integer q_codim(const HilbertPolynomial& p, int n, long t);

/// Polynomial sum of binomial(t - m + i, i) weighted by v_i: the Hilbert
/// series tail produced by a growth vector v at degree m.
HilbertPolynomial growth_vector_polynomial(const std::vector<long>& v, long m);

/// binomial(t + n, n) as a polynomial in t.
HilbertPolynomial ambient_dimension_polynomial(int n);

/// The per-minimal-variable census of any m-regular Borel slice with
/// Hilbert polynomial p is forced by p and m alone; this computes it.
/// Entry i counts slice members whose smallest variable is x_i.
/// Throws AdmissibilityError when no such vector of nonnegative integers
/// exists.
std::vector<long> forced_growth_vector(const HilbertPolynomial& p, int n, long m);

} // namespace dgin

#endif
