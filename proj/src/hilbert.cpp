#include "dgin/hilbert.hpp"

#include <algorithm>
#include <cctype>

#include "dgin/errors.hpp"

namespace dgin {

namespace {

using Poly = std::vector<Rational>; // power basis, ascending, trimmed

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

// multiply by (t + c)
Poly mul_linear(const Poly& a, const Rational& c) {
  Poly out(a.size() + 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] += a[i];
    out[i] += a[i] * c;
  }
  trim(out);
  return out;
}

Rational eval(const Poly& p, const Rational& t) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

// binomial(t + shift, k) as a polynomial in t
Poly binom_poly(long shift, long k) {
  Poly out{Rational(1)};
  Rational fact(1);
  for (long j = 0; j < k; ++j) {
    out = mul_linear(out, Rational(shift - j));
    fact *= Rational(j + 1);
  }
  for (auto& c : out) c /= fact;
  return out;
}

} // namespace

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim(coeffs_);
  // Integer-valued iff every forward difference at 0 is an integer
  // (the Newton binomial-basis coefficients).
  std::vector<Rational> vals;
  for (std::size_t k = 0; k <= coeffs_.size(); ++k) vals.push_back(eval(coeffs_, Rational(static_cast<long>(k))));
  while (!vals.empty()) {
    if (vals.front().get_den() != 1)
      throw AdmissibilityError("polynomial does not take integer values at the integers");
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    vals.pop_back();
  }
}

HilbertPolynomial HilbertPolynomial::constant(long c) {
  return HilbertPolynomial(c == 0 ? std::vector<Rational>{} : std::vector<Rational>{Rational(c)});
}

Integer HilbertPolynomial::evaluate(long t) const {
  Rational v = eval(coeffs_, Rational(t));
  if (v.get_den() != 1) throw AdmissibilityError("polynomial value is not an integer");
  return v.get_num();
}

std::string HilbertPolynomial::text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string body;
    if (i == 0) {
      body = to_string(a);
    } else {
      if (a != 1) body = to_string(a);
      body += "t";
      if (i > 1) body += "^" + std::to_string(i);
    }
    out += body;
  }
  return out.empty() ? "0" : out;
}

HilbertPolynomial HilbertPolynomial::parse(const std::string& text) {
  std::vector<Rational> coeffs;
  auto add_term = [&](const Rational& c, long k) {
    if (k > 64) throw ParseError("exponent too large");
    if (static_cast<long>(coeffs.size()) <= k) coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(k)] += c;
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long {
    long v = 0;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 100000000) throw ParseError("coefficient too large", static_cast<long>(i));
      ++i;
    }
    if (i == start) throw ParseError("expected a number", static_cast<long>(i));
    return v;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", static_cast<long>(i));
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = parse_int();
      coeff = Rational(num);
      if (i < text.size() && text[i] == '/') {
        ++i;
        long den = parse_int();
        if (den == 0) throw ParseError("zero denominator", static_cast<long>(i));
        coeff /= Rational(den);
      }
      have_coeff = true;
    }
    long k = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        k = parse_int();
      }
    } else if (!have_coeff) {
      throw ParseError("expected a term", static_cast<long>(i));
    }
    add_term(Rational(sign) * coeff, k);
    first = false;
    skip_ws();
  }
  return HilbertPolynomial(std::move(coeffs));
}

GotzmannDecomposition gotzmann_decompose(const HilbertPolynomial& p) {
  if (p.is_zero()) throw AdmissibilityError("the zero polynomial has no Gotzmann decomposition");
  Poly rem = p.coefficients();
  GotzmannDecomposition out;
  const long cap = 10000;
  long i = 1;
  while (!rem.empty()) {
    if (i > cap) throw ResourceError("Gotzmann decomposition exceeds 10000 terms");
    if (rem.back() < 0)
      throw AdmissibilityError("not a Hilbert polynomial: remainder has negative leading coefficient after " +
                               std::to_string(i - 1) + " terms");
    long a = static_cast<long>(rem.size()) - 1;
    if (!out.exponents.empty() && a > out.exponents.back())
      throw AdmissibilityError("not a Hilbert polynomial: decomposition exponents fail to decrease at term " +
                               std::to_string(i));
    rem = sub(rem, binom_poly(a - (i - 1), a));
    out.exponents.push_back(a);
    ++i;
  }
  return out;
}

long gotzmann_number(const HilbertPolynomial& p) { return gotzmann_decompose(p).number(); }

Integer q_codim(const HilbertPolynomial& p, int n, long t) {
  if (n < 1) throw DimensionError("ambient dimension must be at least 1");
  if (t < 0) throw DimensionError("degree must be nonnegative");
  return binomial(n + t, n) - p.evaluate(t);
}

HilbertPolynomial growth_vector_polynomial(const std::vector<long>& v, long m) {
  Poly acc;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    long i = static_cast<long>(idx);
    Poly term = binom_poly(-m + i, i);
    for (auto& c : term) c *= Rational(v[idx]);
    acc = add(acc, term);
  }
  return HilbertPolynomial(std::move(acc));
}

HilbertPolynomial ambient_dimension_polynomial(int n) {
  if (n < 1) throw DimensionError("ambient dimension must be at least 1");
  return HilbertPolynomial(binom_poly(n, n));
}

std::vector<long> forced_growth_vector(const HilbertPolynomial& p, int n, long m) {
  Poly rem = sub(ambient_dimension_polynomial(n).coefficients(), p.coefficients());
  std::vector<long> v(static_cast<std::size_t>(n) + 1, 0);
  Rational fact(1);
  std::vector<Rational> factorials{Rational(1)};
  for (int j = 1; j <= n; ++j) {
    fact *= Rational(j);
    factorials.push_back(fact);
  }
  for (int j = n; j >= 0; --j) {
    if (static_cast<long>(rem.size()) - 1 > j)
      throw AdmissibilityError("growth vector extraction failed: remainder degree too high");
    Rational lead = (static_cast<long>(rem.size()) - 1 == j && !rem.empty()) ? rem.back() : Rational(0);
    Rational vj = lead * factorials[static_cast<std::size_t>(j)];
    vj.canonicalize();
    if (vj.get_den() != 1 || vj < 0)
      throw AdmissibilityError("no Borel ideal with this Hilbert polynomial: growth vector entry v_" +
                               std::to_string(j) + " = " + to_string(vj) + " is not a nonnegative integer");
    if (!mpz_fits_slong_p(vj.get_num().get_mpz_t()))
      throw ResourceError("growth vector entry too large");
    v[static_cast<std::size_t>(j)] = vj.get_num().get_si();
    if (vj != 0) {
      Poly term = binom_poly(-m + j, j);
      for (auto& c : term) c *= vj;
      rem = sub(rem, term);
    }
  }
  if (!rem.empty())
    throw AdmissibilityError("no Borel ideal with this Hilbert polynomial: growth vector leaves a nonzero remainder");
  return v;
}

} // namespace dgin
