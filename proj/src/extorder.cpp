#include "dgin/extorder.hpp"

#include <algorithm>
#include <utility>

#include "dgin/errors.hpp"

namespace dgin {

namespace {

void check_shape(const ExtensorTerm& a, const ExtensorTerm& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("extensor terms live in different variable counts");
  if (a.degree() != b.degree())
    throw DimensionError("extensor terms have different degrees");
  if (a.size() != b.size())
    throw DimensionError("extensor terms have different cardinalities");
}

// Positions of a slice's members inside an ascending sorted list of distinct
// monomials. Larger rank means larger monomial.
std::vector<int> rank_array(const ExtensorTerm& s, const std::vector<Monomial>& universe,
                            const TermOrder& order) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (const Monomial& m : s.monomials()) {
    auto it = std::lower_bound(universe.begin(), universe.end(), m,
                               [&order](const Monomial& x, const Monomial& y) { return order.less(x, y); });
    out.push_back(static_cast<int>(it - universe.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> sorted_union(const std::vector<ExtensorTerm>& slices, const TermOrder& order) {
  std::vector<Monomial> all;
  for (const ExtensorTerm& s : slices)
    all.insert(all.end(), s.monomials().begin(), s.monomials().end());
  std::sort(all.begin(), all.end(),
            [&order](const Monomial& x, const Monomial& y) { return order.less(x, y); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

DdVerdict combine(bool a_below, bool b_below) {
  if (a_below && b_below) return DdVerdict::Equal;
  if (a_below) return DdVerdict::FirstBelow;
  if (b_below) return DdVerdict::SecondBelow;
  return DdVerdict::Incomparable;
}

// ra, rb ascending. Componentwise test on the sorted lists.
bool sorted_below(const std::vector<int>& ra, const std::vector<int>& rb) {
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i] > rb[i]) return false;
  return true;
}

// For every threshold, the count of members at or above it must not drop
// going from ra to rb.
bool counting_below(const std::vector<int>& ra, const std::vector<int>& rb, int universe_size) {
  for (int c = 0; c < universe_size; ++c) {
    auto at_least = [c](const std::vector<int>& v) {
      return v.end() - std::lower_bound(v.begin(), v.end(), c);
    };
    if (at_least(ra) > at_least(rb)) return false;
  }
  return true;
}

// Greedy bijection: smallest member of ra first, matched to the smallest
// still-free member of rb not below it. Succeeds exactly when a
// never-decreasing bijection exists.
bool matching_below(const std::vector<int>& ra, const std::vector<int>& rb) {
  std::size_t j = 0;
  std::vector<std::pair<int, int>> matched;
  matched.reserve(ra.size());
  for (int a : ra) {
    while (j < rb.size() && rb[j] < a) ++j;
    if (j == rb.size()) return false;
    matched.emplace_back(a, rb[j]);
    ++j;
  }
  for (auto [a, b] : matched)
    if (b < a) throw Error("internal: greedy matching produced a decreasing pair");
  return true;
}

DdVerdict symmdiff_verdict(const std::vector<int>& ra, const std::vector<int>& rb) {
  std::vector<int> da, db;
  std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(da));
  std::set_difference(rb.begin(), rb.end(), ra.begin(), ra.end(), std::back_inserter(db));
  if (da.empty()) return DdVerdict::Equal;
  return combine(sorted_below(da, db), sorted_below(db, da));
}

DdVerdict ranked_dd(const std::vector<int>& ra, const std::vector<int>& rb, int universe_size,
                    DdMethod method) {
  switch (method) {
    case DdMethod::Sorted:
      return combine(sorted_below(ra, rb), sorted_below(rb, ra));
    case DdMethod::Counting:
      return combine(counting_below(ra, rb, universe_size), counting_below(rb, ra, universe_size));
    case DdMethod::SymmDiff:
      return symmdiff_verdict(ra, rb);
    case DdMethod::Matching:
      return combine(matching_below(ra, rb), matching_below(rb, ra));
  }
  throw Error("internal: unknown dd method");
}

} // namespace

int eisenbud_compare(const TermOrder& order, const ExtensorTerm& a, const ExtensorTerm& b) {
  check_shape(a, b);
  std::vector<Monomial> da = a.monomials();
  std::vector<Monomial> db = b.monomials();
  OrderGreater greater{&order};
  std::sort(da.begin(), da.end(), greater);
  std::sort(db.begin(), db.end(), greater);
  for (std::size_t i = 0; i < da.size(); ++i) {
    int c = order.compare(da[i], db[i]);
    if (c != 0) return c;
  }
  return 0;
}

DdMethod parse_dd_method(const std::string& text) {
  if (text == "sorted") return DdMethod::Sorted;
  if (text == "counting") return DdMethod::Counting;
  if (text == "symmdiff") return DdMethod::SymmDiff;
  if (text == "matching") return DdMethod::Matching;
  throw ParseError("unknown comparison method '" + text + "'");
}

std::string dd_method_text(DdMethod method) {
  switch (method) {
    case DdMethod::Sorted: return "sorted";
    case DdMethod::Counting: return "counting";
    case DdMethod::SymmDiff: return "symmdiff";
    case DdMethod::Matching: return "matching";
  }
  throw Error("internal: unknown dd method");
}

std::string dd_verdict_text(DdVerdict v) {
  switch (v) {
    case DdVerdict::Equal: return "equal";
    case DdVerdict::FirstBelow: return "first_below";
    case DdVerdict::SecondBelow: return "second_below";
    case DdVerdict::Incomparable: return "incomparable";
  }
  throw Error("internal: unknown dd verdict");
}

DdVerdict dd_compare(const TermOrder& order, const ExtensorTerm& a, const ExtensorTerm& b,
                     DdMethod method) {
  check_shape(a, b);
  if (a.empty()) return DdVerdict::Equal;
  std::vector<Monomial> universe = sorted_union({a, b}, order);
  std::vector<int> ra = rank_array(a, universe, order);
  std::vector<int> rb = rank_array(b, universe, order);
  return ranked_dd(ra, rb, static_cast<int>(universe.size()), method);
}

std::vector<std::size_t> maximal_elements(const TermOrder& order,
                                          const std::vector<ExtensorTerm>& slices) {
  if (slices.empty()) return {};
  for (std::size_t i = 1; i < slices.size(); ++i) check_shape(slices[0], slices[i]);
  std::vector<Monomial> universe = sorted_union(slices, order);
  std::vector<std::vector<int>> ranks;
  ranks.reserve(slices.size());
  for (const ExtensorTerm& s : slices) ranks.push_back(rank_array(s, universe, order));

  std::vector<char> dominated(slices.size(), 0);
  for (std::size_t i = 0; i < slices.size(); ++i)
    for (std::size_t j = i + 1; j < slices.size(); ++j) {
      if (dominated[i] && dominated[j]) continue;
      bool ij = sorted_below(ranks[i], ranks[j]);
      bool ji = sorted_below(ranks[j], ranks[i]);
      if (ij && !ji) dominated[i] = 1;
      if (ji && !ij) dominated[j] = 1;
    }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < slices.size(); ++i)
    if (!dominated[i]) out.push_back(i);
  return out;
}

PersistenceReport check_persistence(const TermOrder& order, const ExtensorTerm& a,
                                    const ExtensorTerm& b) {
  check_shape(a, b);
  if (!a.is_borel_closed() || !b.is_borel_closed())
    throw UnsupportedInputError("persistence check needs Borel-closed slices");
  if (growth_vector(a) != growth_vector(b))
    throw AdmissibilityError("persistence check needs slices with equal growth vectors");
  PersistenceReport report;
  report.verdict_low = dd_compare(order, a, b);
  report.verdict_high = dd_compare(order, ek_expand(a), ek_expand(b));
  report.persistent = report.verdict_low == report.verdict_high;
  return report;
}

} // namespace dgin
