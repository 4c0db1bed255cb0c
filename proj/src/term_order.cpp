#include "dgin/term_order.hpp"

#include <cctype>

#include "dgin/errors.hpp"

namespace dgin {

TermOrder TermOrder::weight(std::vector<long> weights) {
  if (weights.empty()) throw AdmissibilityError("weight vector must not be empty");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw AdmissibilityError("weights must be positive");
    if (weights[i] > 1000000) throw AdmissibilityError("weight too large");
    if (i > 0 && weights[i] < weights[i - 1])
      throw AdmissibilityError("weights must be nondecreasing so that x0 < x1 < ... < xn");
  }
  return TermOrder(OrderKind::Weight, std::move(weights));
}

namespace {

int lex_from_top(const Monomial& a, const Monomial& b) {
  for (int k = a.nvars() - 1; k >= 0; --k) {
    int d = a.exponent(k) - b.exponent(k);
    if (d != 0) return d < 0 ? -1 : 1;
  }
  return 0;
}

} // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw DimensionError("variable count mismatch in comparison");
  if (kind_ == OrderKind::Lex) return lex_from_top(a, b);
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  switch (kind_) {
    case OrderKind::DegLex:
      return lex_from_top(a, b);
    case OrderKind::DegRevLex:
      for (int k = 0; k < a.nvars(); ++k) {
        int d = a.exponent(k) - b.exponent(k);
        if (d != 0) return d > 0 ? -1 : 1;
      }
      return 0;
    case OrderKind::Weight: {
      if (static_cast<int>(weights_.size()) != a.nvars())
        throw DimensionError("weight vector length does not match variable count");
      long long wa = 0, wb = 0;
      for (int k = 0; k < a.nvars(); ++k) {
        wa += static_cast<long long>(weights_[static_cast<std::size_t>(k)]) * a.exponent(k);
        wb += static_cast<long long>(weights_[static_cast<std::size_t>(k)]) * b.exponent(k);
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return lex_from_top(a, b);
    }
    default:
      return 0;
  }
}

std::string TermOrder::text() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegLex:
      return "deglex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::Weight: {
      std::string out = "weight:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights_[i]);
      }
      return out;
    }
  }
  return "degrevlex";
}

TermOrder TermOrder::parse(const std::string& text, int nvars) {
  if (text == "lex") return lex();
  if (text == "deglex") return deglex();
  if (text == "degrevlex") return degrevlex();
  const std::string prefix = "weight:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<long> w;
    std::size_t i = prefix.size();
    while (i < text.size()) {
      bool neg = false;
      if (text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected weight entry", static_cast<long>(i));
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 10000000) throw ParseError("weight too large", static_cast<long>(i));
        ++i;
      }
      w.push_back(neg ? -v : v);
      if (i < text.size()) {
        if (text[i] != ',') throw ParseError("expected ',' between weights", static_cast<long>(i));
        ++i;
      }
    }
    if (static_cast<int>(w.size()) != nvars)
      throw ParseError("weight vector length " + std::to_string(w.size()) + " does not match " +
                       std::to_string(nvars) + " variables");
    return weight(std::move(w));
  }
  throw ParseError("unknown term order '" + text + "'");
}

} // namespace dgin
