#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dgin/ideal.hpp"
#include "dgin/linalg.hpp"
#include "dgin/monomial.hpp"
#include "dgin/rational.hpp"
#include "dgin/rng.hpp"
#include "dgin/term_order.hpp"

namespace dgin {

class HomogeneousPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialTupleLess>;

  HomogeneousPolynomial(int nvars, int degree);
  HomogeneousPolynomial(int nvars, int degree, TermMap terms);
  static HomogeneousPolynomial from_monomial(const Monomial& m, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Monomial leading_monomial(const TermOrder& order) const;

  HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator-(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator*(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial scaled(const Rational& c) const;
  HomogeneousPolynomial times(const Monomial& m) const;
  bool operator==(const HomogeneousPolynomial& other) const;
  bool operator!=(const HomogeneousPolynomial& other) const { return !(*this == other); }

 private:
  int nvars_;
  int degree_;
  TermMap terms_;
};

// Invertible change of coordinates x_i -> sum_j entry(i,j) x_j.
class GLMatrix {
 public:
  GLMatrix(int nvars, std::vector<std::vector<Rational>> entries);
  static GLMatrix identity(int nvars);

  int nvars() const { return nvars_; }
  const Rational& entry(int i, int j) const;

 private:
  int nvars_;
  std::vector<std::vector<Rational>> entries_;
};

// Supplier of change-of-coordinate matrices for the Monte-Carlo routines.
class GlSource {
 public:
  virtual ~GlSource() = default;
  virtual GLMatrix next(int nvars) = 0;
};

// Uniform integer entries in [-amplitude, amplitude]; singular draws are
// rejected and redrawn.
class RandomGlSource : public GlSource {
 public:
  explicit RandomGlSource(std::uint64_t seed, long amplitude = 997);
  GLMatrix next(int nvars) override;

 private:
  Rng rng_;
  long amplitude_;
};

// A q-dimensional subspace of the degree-m slice of the polynomial ring:
// a K-point of the Grassmannian.
class Subspace {
 public:
  Subspace(int nvars, int degree, std::vector<HomogeneousPolynomial> basis);
  static Subspace span(const DegreeSlice& slice);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<HomogeneousPolynomial>& basis() const { return basis_; }

 private:
  int nvars_;
  int degree_;
  std::vector<HomogeneousPolynomial> basis_;
};

// Canonical reduced-row-echelon basis, columns descending under the order.
Subspace rref_basis(const Subspace& v, const TermOrder& order);

// Leading terms of the canonical basis, as a slice in normal expression.
DegreeSlice initial_extensor(const Subspace& v, const TermOrder& order);

HomogeneousPolynomial apply_gl(const GLMatrix& g, const HomogeneousPolynomial& f);
Subspace apply_gl(const GLMatrix& g, const Subspace& v);

// Monte-Carlo generic initial extensor: the largest initial extensor over
// random changes of coordinates, certified by Borel-closure plus agreement
// of at least two independent draws.
DegreeSlice generic_initial_extensor(const Subspace& v, const TermOrder& order, GlSource& source,
                                     int trials = 4);
DegreeSlice generic_initial_extensor(const Subspace& v, const TermOrder& order, std::uint64_t seed,
                                     int trials = 4);

// Every q-subset of degree-m monomials whose minor is nonzero, sorted
// descending, so the initial extensor comes first.
std::vector<DegreeSlice> delta_support(const Subspace& v, const TermOrder& order,
                                       long budget = 100000);

// Dimensions of the graded pieces of the ideal generated by v, for
// t = degree .. t_max.
std::vector<long long> ideal_hilbert_function(const Subspace& v, long t_max);

// Generic initial ideal of the ideal generated by homogeneous polynomials,
// reconstructed degree by degree up to degree_bound.
MonomialIdeal gin_ideal(const std::vector<HomogeneousPolynomial>& gens, const TermOrder& order,
                        GlSource& source, int degree_bound, int trials = 2);
MonomialIdeal gin_ideal(const std::vector<HomogeneousPolynomial>& gens, const TermOrder& order,
                        std::uint64_t seed, int degree_bound, int trials = 2);

// Text forms. Polynomials are sums of terms `c*<monomial>` with integer or
// `p/q` coefficients; lists are semicolon-separated.
HomogeneousPolynomial parse_polynomial(const std::string& text, int nvars);
std::vector<HomogeneousPolynomial> parse_polynomial_list(const std::string& text, int nvars);
Subspace parse_subspace(const std::string& text, int nvars);
std::string format_polynomial(const HomogeneousPolynomial& f, const TermOrder& order);

} // namespace dgin
