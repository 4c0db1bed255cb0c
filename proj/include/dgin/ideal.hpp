#ifndef DGIN_IDEAL_HPP
#define DGIN_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "dgin/hilbert.hpp"
#include "dgin/monomial.hpp"
#include "dgin/term_order.hpp"

namespace dgin {

/// A set of distinct monomials of one common degree, kept sorted in
/// descending degrevlex as a canonical storage order.  Used both for the
/// degree-m pieces of ideals and as the underlying set of an extensor term.
class DegreeSlice {
public:
  DegreeSlice(int nvars, int degree) : nvars_(nvars), degree_(degree) {}
  DegreeSlice(int nvars, int degree, std::vector<Monomial> monomials);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  bool empty() const { return monomials_.empty(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  bool contains(const Monomial& m) const;

  /// Closed under the strongly-stable exchanges (within the slice degree).
  bool is_borel_closed() const;

  bool operator==(const DegreeSlice& other) const {
    return nvars_ == other.nvars_ && degree_ == other.degree_ && monomials_ == other.monomials_;
  }
  bool operator!=(const DegreeSlice& other) const { return !(*this == other); }

private:
  int nvars_;
  int degree_;
  std::vector<Monomial> monomials_; // canonical: descending degrevlex
};

/// Counts of slice members by smallest dividing variable; entry i counts
/// members with min_var == i.  Degree-0 slices are rejected.
std::vector<long> growth_vector(const DegreeSlice& slice);

/// Expansion one degree up as {m * x_l : l <= min_var(m)}, with min of the
/// unit monomial read as the top variable.  For a Borel-closed slice this
/// is exactly the next slice of the generated ideal, each element reached
/// once.  Input must be Borel-closed.
DegreeSlice ek_expand(const DegreeSlice& slice);

/// Plain expansion: multiply by every variable and deduplicate.  Equals
/// ek_expand on Borel-closed slices; no closure requirement.
DegreeSlice expand(const DegreeSlice& slice);

/// A monomial ideal held by its minimal generators (constructors
/// minimalize).  Canonical generator order: descending degrevlex.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Monomial> generators);

  static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool contains(const Monomial& m) const;

  /// All degree-m members as a slice.
  DegreeSlice truncate(int m) const;

  /// Strong stability: every generator's Borel moves stay in the ideal.
  bool is_borel_fixed() const;

  /// Maximum generator degree.  Restricted to Borel-fixed ideals, where
  /// this equals the Castelnuovo-Mumford regularity.
  int regularity() const;

  long long hilbert_function(long t) const;
  std::vector<long long> hilbert_function_range(long upto) const;

  /// For Borel-fixed ideals: exact via the growth vector of the top slice.
  /// Otherwise falls back to Newton interpolation on nvars()+1 consecutive
  /// values, verified on three further degrees (NotStabilizedError when the
  /// values have not settled onto a polynomial).
  HilbertPolynomial hilbert_polynomial() const;

  bool operator==(const MonomialIdeal& other) const {
    return nvars_ == other.nvars_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

struct SaturationResult {
  MonomialIdeal ideal;
  /// Set when a pure power of x0 appears among the generators, collapsing
  /// the saturation to the unit ideal.
  bool degenerate;
};

/// Saturation with respect to x0, computed by stripping x0 from each
/// generator.  Inputs with a pure x0-power generator short-circuit to the
/// unit ideal with the degenerate flag; all other inputs must be
/// Borel-fixed, for which this agrees with saturation by the irrelevant
/// maximal ideal.
SaturationResult saturate(const MonomialIdeal& ideal);

/// Strip both x0 and x1 from every generator and minimalize.  Requires at
/// least 4 variables; matches the two-variable saturation on Borel-fixed
/// input.
MonomialIdeal x0x1_saturation(const MonomialIdeal& ideal);

/// The saturated lex-segment ideal with Hilbert polynomial p in
/// K[x0..xn].  Throws AdmissibilityError when p is not a Hilbert
/// polynomial of a subscheme of the corresponding projective space.
MonomialIdeal lex_segment_ideal(const HilbertPolynomial& p, int n);

/// Same construction but taking the top segment under an arbitrary term
/// order; returns nothing when the segment's growth shows its ideal does
/// not have Hilbert polynomial p.
std::optional<MonomialIdeal> hilb_segment_ideal(const HilbertPolynomial& p, int n, const TermOrder& order);

/// Text forms.  Ideal text: comma-separated monomials.  Slice text wraps
/// comma-separated monomials in brackets: [x2^2, x1*x2].
MonomialIdeal parse_ideal(const std::string& text, int nvars);
std::string format_ideal(const MonomialIdeal& ideal);
DegreeSlice parse_slice(const std::string& text, int nvars);
std::string format_slice(const DegreeSlice& slice, const TermOrder& order);

} // namespace dgin

#endif
