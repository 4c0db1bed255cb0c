#ifndef DGIN_MONOMIAL_HPP
#define DGIN_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dgin {

/// A monomial in the variables x0..x{nvars-1}, stored as its exponent tuple.
///
/// The ambient variable count is part of the value: operations mixing
/// monomials from rings with different variable counts throw DimensionError.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(int nvars, int index);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_unit() const { return degree() == 0; }

  /// Index of the smallest variable dividing the monomial.  Throws on 1.
  int min_var() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// Exact quotient; throws DimensionError when `other` does not divide.
  Monomial divide_by(const Monomial& other) const;

  /// The set {x_j * a / x_i : i < j, x_i divides a}: every monomial reachable
  /// by one strongly-stable exchange of a variable for a larger one.
  /// Deduplicated; every member is strictly larger in every graded order.
  std::vector<Monomial> borel_moves() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  /// Order-free tuple comparison, for use as a container key only.
  bool tuple_less(const Monomial& other) const { return exps_ < other.exps_; }

private:
  std::vector<int> exps_;
};

struct MonomialTupleLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.tuple_less(b); }
};

/// All monomials of the exact degree `degree` in `nvars` variables.
std::vector<Monomial> all_monomials(int nvars, int degree);

/// Grammar: factors `x<i>` or `x<i>^<e>` joined by `*`, e >= 1, each
/// variable at most once; the constant monomial is written `1`.
Monomial parse_monomial(const std::string& text, int nvars);

/// Factors printed by descending variable index, `^1` omitted, unit = "1".
std::string format_monomial(const Monomial& m);

} // namespace dgin

#endif
