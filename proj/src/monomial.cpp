#include "dgin/monomial.hpp"

#include <algorithm>
#include <cctype>

#include "dgin/errors.hpp"

namespace dgin {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw DimensionError("negative exponent in monomial");
}

Monomial Monomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars);
  m.exps_[static_cast<std::size_t>(index)] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

int Monomial::min_var() const {
  for (int i = 0; i < nvars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) return i;
  throw DimensionError("min_var of the unit monomial is undefined");
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("variable count mismatch");
  for (int i = 0; i < nvars(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) throw DimensionError("variable count mismatch");
  std::vector<int> out(exps_);
  for (int i = 0; i < nvars(); ++i) out[static_cast<std::size_t>(i)] += other.exps_[static_cast<std::size_t>(i)];
  return Monomial(std::move(out));
}

Monomial Monomial::divide_by(const Monomial& other) const {
  if (!other.divides(*this)) throw DimensionError("monomial quotient does not exist");
  std::vector<int> out(exps_);
  for (int i = 0; i < nvars(); ++i) out[static_cast<std::size_t>(i)] -= other.exps_[static_cast<std::size_t>(i)];
  return Monomial(std::move(out));
}

std::vector<Monomial> Monomial::borel_moves() const {
  std::vector<Monomial> out;
  const int n = nvars();
  for (int i = 0; i < n; ++i) {
    if (exps_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> e(exps_);
      e[static_cast<std::size_t>(i)] -= 1;
      e[static_cast<std::size_t>(j)] += 1;
      out.emplace_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), MonomialTupleLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Monomial> all_monomials(int nvars, int degree) {
  if (nvars <= 0) throw DimensionError("need at least one variable");
  if (degree < 0) throw DimensionError("negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  // Recursive distribution of `degree` over the variables, leftmost first.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      exps[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parse_uint(const std::string& s, std::size_t& i, const char* what) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError(std::string("expected ") + what, static_cast<long>(i));
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) throw ParseError(std::string(what) + " too large", static_cast<long>(i));
    ++i;
  }
  return v;
}

} // namespace

Monomial parse_monomial(const std::string& text, int nvars) {
  if (nvars <= 0) throw DimensionError("need at least one variable");
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  std::size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing input after constant monomial", static_cast<long>(i));
    return Monomial(std::move(exps));
  }
  bool first = true;
  while (true) {
    skip_ws(text, i);
    if (!first) {
      if (i >= text.size() || text[i] != '*') break;
      ++i;
      skip_ws(text, i);
    }
    if (i >= text.size() || text[i] != 'x')
      throw ParseError("expected variable factor 'x<i>'", static_cast<long>(i));
    ++i;
    long index = parse_uint(text, i, "variable index");
    if (index >= nvars)
      throw ParseError("variable index " + std::to_string(index) + " outside x0..x" + std::to_string(nvars - 1),
                       static_cast<long>(i));
    if (seen[static_cast<std::size_t>(index)])
      throw ParseError("variable x" + std::to_string(index) + " repeated", static_cast<long>(i));
    seen[static_cast<std::size_t>(index)] = true;
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = parse_uint(text, i, "exponent");
      if (e == 0) throw ParseError("zero exponents are forbidden", static_cast<long>(i));
    }
    exps[static_cast<std::size_t>(index)] = static_cast<int>(e);
    first = false;
    skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] != '*') throw ParseError("expected '*' between factors", static_cast<long>(i));
  }
  if (first) throw ParseError("empty monomial", 0);
  return Monomial(std::move(exps));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (int i = m.nvars() - 1; i >= 0; --i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

} // namespace dgin
