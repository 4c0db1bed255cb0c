#include "dgin/ideal.hpp"

#include <algorithm>

#include "dgin/errors.hpp"

namespace dgin {

namespace {

const TermOrder& canonical_order() {
  static const TermOrder order = TermOrder::degrevlex();
  return order;
}

void sort_descending_canonical(std::vector<Monomial>& monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_order().greater(a, b); });
}

} // namespace

DegreeSlice::DegreeSlice(int nvars, int degree, std::vector<Monomial> monomials)
    : nvars_(nvars), degree_(degree), monomials_(std::move(monomials)) {
  for (const Monomial& m : monomials_) {
    if (m.nvars() != nvars_) throw DimensionError("slice member has wrong variable count");
    if (m.degree() != degree_) throw DimensionError("slice member has wrong degree");
  }
  sort_descending_canonical(monomials_);
  for (std::size_t i = 1; i < monomials_.size(); ++i)
    if (monomials_[i] == monomials_[i - 1]) throw DimensionError("duplicate monomial in slice");
}

bool DegreeSlice::contains(const Monomial& m) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m,
                             [](const Monomial& a, const Monomial& b) { return canonical_order().greater(a, b); });
  return it != monomials_.end() && *it == m;
}

bool DegreeSlice::is_borel_closed() const {
  for (const Monomial& m : monomials_)
    for (const Monomial& up : m.borel_moves())
      if (!contains(up)) return false;
  return true;
}

std::vector<long> growth_vector(const DegreeSlice& slice) {
  if (slice.degree() < 1) throw DimensionError("growth vector requires a slice of positive degree");
  std::vector<long> v(static_cast<std::size_t>(slice.nvars()), 0);
  for (const Monomial& m : slice.monomials()) ++v[static_cast<std::size_t>(m.min_var())];
  return v;
}

DegreeSlice ek_expand(const DegreeSlice& slice) {
  if (!slice.is_borel_closed()) throw UnsupportedInputError("expansion requires a Borel-closed slice");
  if (slice.degree() == 0) {
    // min(1) reads as the top variable, so the unit slice expands to all of S_1.
    if (slice.empty()) return DegreeSlice(slice.nvars(), 1);
    return DegreeSlice(slice.nvars(), 1, all_monomials(slice.nvars(), 1));
  }
  std::vector<Monomial> out;
  for (const Monomial& m : slice.monomials()) {
    int top = m.min_var();
    for (int l = 0; l <= top; ++l) out.push_back(m * Monomial::variable(slice.nvars(), l));
  }
  return DegreeSlice(slice.nvars(), slice.degree() + 1, std::move(out));
}

DegreeSlice expand(const DegreeSlice& slice) {
  std::vector<Monomial> out;
  for (const Monomial& m : slice.monomials())
    for (int l = 0; l < slice.nvars(); ++l) out.push_back(m * Monomial::variable(slice.nvars(), l));
  std::sort(out.begin(), out.end(), MonomialTupleLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return DegreeSlice(slice.nvars(), slice.degree() + 1, std::move(out));
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const Monomial& g : generators)
    if (g.nvars() != nvars_) throw DimensionError("generator has wrong variable count");
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.tuple_less(b);
  });
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
  sort_descending_canonical(gens_);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

DegreeSlice MonomialIdeal::truncate(int m) const {
  if (m < 0) throw DimensionError("negative degree");
  std::vector<Monomial> out;
  for (const Monomial& candidate : all_monomials(nvars_, m))
    if (contains(candidate)) out.push_back(candidate);
  return DegreeSlice(nvars_, m, std::move(out));
}

bool MonomialIdeal::is_borel_fixed() const {
  for (const Monomial& g : gens_)
    for (const Monomial& up : g.borel_moves())
      if (!contains(up)) return false;
  return true;
}

int MonomialIdeal::regularity() const {
  if (is_zero()) throw UnsupportedInputError("regularity of the zero ideal is undefined here");
  if (!is_borel_fixed()) throw UnsupportedInputError("regularity is only computed for Borel-fixed ideals");
  int m = 0;
  for (const Monomial& g : gens_) m = std::max(m, g.degree());
  return m;
}

long long MonomialIdeal::hilbert_function(long t) const {
  if (t < 0) throw DimensionError("negative degree");
  Integer ambient = binomial(static_cast<long>(nvars_) - 1 + t, static_cast<long>(nvars_) - 1);
  if (!mpz_fits_slong_p(ambient.get_mpz_t())) throw ResourceError("degree too large for Hilbert function scan");
  return ambient.get_si() - truncate(static_cast<int>(t)).size();
}

std::vector<long long> MonomialIdeal::hilbert_function_range(long upto) const {
  std::vector<long long> out;
  for (long t = 0; t <= upto; ++t) out.push_back(hilbert_function(t));
  return out;
}

HilbertPolynomial MonomialIdeal::hilbert_polynomial() const {
  const int n = nvars_ - 1;
  if (is_unit()) return HilbertPolynomial(std::vector<Rational>{});
  if (is_zero()) return ambient_dimension_polynomial(n);
  int m = 0;
  for (const Monomial& g : gens_) m = std::max(m, g.degree());
  if (is_borel_fixed()) {
    std::vector<long> v = growth_vector(truncate(m));
    HilbertPolynomial tail = growth_vector_polynomial(v, m);
    std::vector<Rational> coeffs = ambient_dimension_polynomial(n).coefficients();
    const auto& tc = tail.coefficients();
    coeffs.resize(std::max(coeffs.size(), tc.size()), Rational(0));
    for (std::size_t i = 0; i < tc.size(); ++i) coeffs[i] -= tc[i];
    return HilbertPolynomial(std::move(coeffs));
  }
  // Newton forward-difference interpolation through nvars()+1 consecutive
  // values starting at the top generator degree.
  const int points = nvars_ + 1;
  std::vector<Rational> diffs;
  for (int k = 0; k < points; ++k) diffs.emplace_back(static_cast<long>(hilbert_function(m + k)));
  std::vector<Rational> newton;
  for (int level = 0; level < points; ++level) {
    newton.push_back(diffs.front());
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  // p(t) = sum_k newton[k] * binomial(t - m, k)
  std::vector<Rational> coeffs;
  std::vector<Rational> basis{Rational(1)}; // binomial(t - m, k), built incrementally
  Rational fact(1);
  for (int k = 0; k < points; ++k) {
    if (k > 0) {
      // multiply by (t - m - (k-1)) / k
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] += basis[i] * Rational(-(m + k - 1));
      }
      basis = std::move(next);
      fact *= Rational(k);
    }
    if (newton[static_cast<std::size_t>(k)] == 0) continue;
    Rational scale = newton[static_cast<std::size_t>(k)] / fact;
    coeffs.resize(std::max(coeffs.size(), basis.size()), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += basis[i] * scale;
  }
  HilbertPolynomial candidate{std::move(coeffs)};
  for (int extra = 0; extra < 3; ++extra) {
    long t = m + points + extra;
    if (candidate.evaluate(t) != Integer(static_cast<long>(hilbert_function(t))))
      throw NotStabilizedError("Hilbert function has not stabilized to a polynomial at degree " + std::to_string(t));
  }
  return candidate;
}

SaturationResult saturate(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {ideal, false};
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() > 0 && g.exponent(0) == g.degree())
      return {MonomialIdeal::unit(ideal.nvars()), true};
  }
  if (ideal.is_unit()) return {ideal, false};
  if (!ideal.is_borel_fixed())
    throw UnsupportedInputError("saturation by stripping x0 requires a Borel-fixed ideal");
  std::vector<Monomial> stripped;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e = g.exponents();
    e[0] = 0;
    stripped.emplace_back(std::move(e));
  }
  return {MonomialIdeal(ideal.nvars(), std::move(stripped)), false};
}

MonomialIdeal x0x1_saturation(const MonomialIdeal& ideal) {
  if (ideal.nvars() < 4)
    throw DimensionError("saturation with respect to x0 and x1 requires at least 4 variables");
  std::vector<Monomial> stripped;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e = g.exponents();
    e[0] = 0;
    e[1] = 0;
    stripped.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.nvars(), std::move(stripped));
}

namespace {

// Shared segment construction: take the top q(r) monomials of S_r under
// `order`, validate Macaulay growth, and saturate the span.
// When `growth_is_error` the failed growth check throws; otherwise the
// caller receives nothing.
std::optional<MonomialIdeal> segment_ideal(const HilbertPolynomial& p, int n, const TermOrder& order,
                                           bool growth_is_error) {
  GotzmannDecomposition decomp = gotzmann_decompose(p);
  if (decomp.exponents.front() > n - 1)
    throw AdmissibilityError("polynomial degree " + std::to_string(decomp.exponents.front()) +
                             " is not below the ambient dimension " + std::to_string(n));
  long r = decomp.number();
  Integer q_r = q_codim(p, n, r);
  Integer ambient_r = binomial(n + r, n);
  if (q_r < 0 || q_r > ambient_r)
    throw AdmissibilityError("codimension " + to_string(q_r) + " at degree " + std::to_string(r) +
                             " is out of range");
  if (!mpz_fits_slong_p(q_r.get_mpz_t()) || !mpz_fits_slong_p(ambient_r.get_mpz_t()))
    throw ResourceError("segment size too large");
  long q = q_r.get_si();
  std::vector<Monomial> degree_r = all_monomials(n + 1, static_cast<int>(r));
  std::sort(degree_r.begin(), degree_r.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  degree_r.resize(static_cast<std::size_t>(q));
  DegreeSlice slice(n + 1, static_cast<int>(r), std::move(degree_r));
  if (!slice.is_borel_closed())
    throw UnsupportedInputError("segment under this order is not Borel-closed; the order breaks the variable chain");
  Integer expected = q_codim(p, n, r + 1);
  Integer grown(static_cast<long>(ek_expand(slice).size()));
  if (grown != expected) {
    if (growth_is_error)
      throw AdmissibilityError("not a Hilbert polynomial on this space: Macaulay growth violated at degree " +
                               std::to_string(r + 1) + " (got " + to_string(grown) + ", need " +
                               to_string(expected) + ")");
    return std::nullopt;
  }
  SaturationResult sat = saturate(MonomialIdeal(n + 1, slice.monomials()));
  return sat.ideal;
}

} // namespace

MonomialIdeal lex_segment_ideal(const HilbertPolynomial& p, int n) {
  MonomialIdeal out = *segment_ideal(p, n, TermOrder::deglex(), true);
  if (out.hilbert_polynomial() != p)
    throw AdmissibilityError("lex segment construction did not reproduce the requested Hilbert polynomial");
  return out;
}

std::optional<MonomialIdeal> hilb_segment_ideal(const HilbertPolynomial& p, int n, const TermOrder& order) {
  std::optional<MonomialIdeal> out = segment_ideal(p, n, order, false);
  if (out && out->hilbert_polynomial() != p) return std::nullopt;
  return out;
}

MonomialIdeal parse_ideal(const std::string& text, int nvars) {
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    bool blank = piece.find_first_not_of(" \t") == std::string::npos;
    if (!blank) gens.push_back(parse_monomial(piece, nvars));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (gens.empty()) throw ParseError("empty ideal text");
  return MonomialIdeal(nvars, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.generators()[i]);
  }
  return out;
}

DegreeSlice parse_slice(const std::string& text, int nvars) {
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("slice text must be wrapped in brackets");
  std::string inner = text.substr(open + 1, close - open - 1);
  std::vector<Monomial> monomials;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    std::string piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    bool blank = piece.find_first_not_of(" \t") == std::string::npos;
    if (!blank) monomials.push_back(parse_monomial(piece, nvars));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (monomials.empty()) throw ParseError("empty slice text");
  int degree = monomials.front().degree();
  return DegreeSlice(nvars, degree, std::move(monomials));
}

std::string format_slice(const DegreeSlice& slice, const TermOrder& order) {
  std::vector<Monomial> sorted = slice.monomials();
  std::sort(sorted.begin(), sorted.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  std::string out = "[";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(sorted[i]);
  }
  return out + "]";
}

} // namespace dgin
