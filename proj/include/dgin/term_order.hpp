#ifndef DGIN_TERM_ORDER_HPP
#define DGIN_TERM_ORDER_HPP

#include <string>
#include <vector>

#include "dgin/monomial.hpp"

namespace dgin {

enum class OrderKind { Lex, DegLex, DegRevLex, Weight };

/// A term order on monomials with x0 < x1 < ... < xn on the variables.
///
/// All four kinds are graded (lower degree first) except pure lex, which
/// compares exponents from the top variable downward.  Weight orders
/// compare degree, then the weight dot product, then fall back to the
/// deglex comparison; the weight vector must be positive and nondecreasing
/// so that the variable chain stays x0 < x1 < ... < xn.
class TermOrder {
public:
  static TermOrder lex() { return TermOrder(OrderKind::Lex, {}); }
  static TermOrder deglex() { return TermOrder(OrderKind::DegLex, {}); }
  static TermOrder degrevlex() { return TermOrder(OrderKind::DegRevLex, {}); }
  static TermOrder weight(std::vector<long> weights);

  OrderKind kind() const { return kind_; }
  const std::vector<long>& weights() const { return weights_; }

  /// -1 when a < b, 0 when equal, +1 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// "lex" | "deglex" | "degrevlex" | "weight:<w0>,...,<wn>"
  std::string text() const;
  static TermOrder parse(const std::string& text, int nvars);

  bool operator==(const TermOrder& other) const {
    return kind_ == other.kind_ && weights_ == other.weights_;
  }

private:
  TermOrder(OrderKind kind, std::vector<long> weights) : kind_(kind), weights_(std::move(weights)) {}

  OrderKind kind_;
  std::vector<long> weights_;
};

/// Strict "greater" functor, e.g. for sorting slices into descending order.
struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

} // namespace dgin

#endif
