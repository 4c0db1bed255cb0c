#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dgin/census.hpp"
#include "dgin/errors.hpp"
#include "dgin/extorder.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"
#include "dgin/monomial.hpp"
#include "dgin/rng.hpp"
#include "dgin/term_order.hpp"

using namespace dgin;

namespace {

// Definition-level oracle: A is below B when some bijection A -> B never
// decreases a member.  Walks every permutation, so keep q small.
bool some_bijection_nondecreasing(const TermOrder& order, const std::vector<Monomial>& a,
                                  std::vector<Monomial> b) {
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() <= 6);
  std::sort(b.begin(), b.end(), MonomialTupleLess{});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (order.greater(a[i], b[i])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(b.begin(), b.end(), MonomialTupleLess{}));
  return false;
}

DdVerdict dd_oracle(const TermOrder& order, const ExtensorTerm& a, const ExtensorTerm& b) {
  bool ab = some_bijection_nondecreasing(order, a.monomials(), b.monomials());
  bool ba = some_bijection_nondecreasing(order, b.monomials(), a.monomials());
  if (ab && ba) return DdVerdict::Equal;
  if (ab) return DdVerdict::FirstBelow;
  if (ba) return DdVerdict::SecondBelow;
  return DdVerdict::Incomparable;
}

ExtensorTerm random_subset_slice(Rng& rng, int nvars, int degree, int q) {
  std::vector<Monomial> all = all_monomials(nvars, degree);
  REQUIRE(static_cast<std::size_t>(q) <= all.size());
  for (int i = 0; i < q; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    static_cast<std::size_t>(rng.below(all.size() - static_cast<std::size_t>(i)));
    std::swap(all[static_cast<std::size_t>(i)], all[j]);
  }
  all.resize(static_cast<std::size_t>(q));
  return ExtensorTerm(nvars, degree, std::move(all));
}

bool dd_leq(DdVerdict v) { return v == DdVerdict::Equal || v == DdVerdict::FirstBelow; }

const std::vector<MonomialIdeal>& census_3t2() {
  static const std::vector<MonomialIdeal> census =
      enumerate_borel(HilbertPolynomial::parse("3t+2"), 3);
  return census;
}

const std::vector<MonomialIdeal>& census_7t5() {
  static const std::vector<MonomialIdeal> census =
      enumerate_borel(HilbertPolynomial::parse("7t-5"), 3);
  return census;
}

std::vector<ExtensorTerm> truncations(const std::vector<MonomialIdeal>& census, int m) {
  std::vector<ExtensorTerm> out;
  out.reserve(census.size());
  for (const MonomialIdeal& ideal : census) out.push_back(ideal.truncate(m));
  return out;
}

const std::vector<DdMethod> kMethods = {DdMethod::Sorted, DdMethod::Counting,
                                        DdMethod::SymmDiff, DdMethod::Matching};

} // namespace

TEST_CASE("eisenbud comparison") {
  TermOrder degrevlex = TermOrder::degrevlex();
  ExtensorTerm gin_term = parse_slice("[x2^2, x1*x2, x1^2]", 3);
  ExtensorTerm in_term = parse_slice("[x2^2, x1*x2, x0*x2]", 3);
  CHECK(eisenbud_compare(degrevlex, gin_term, in_term) > 0);
  CHECK(eisenbud_compare(degrevlex, in_term, gin_term) < 0);
  CHECK(eisenbud_compare(degrevlex, gin_term, gin_term) == 0);

  // The lex-segment slice tops every census slice under the lex order.
  TermOrder lex = TermOrder::lex();
  HilbertPolynomial p = HilbertPolynomial::parse("3t+2");
  ExtensorTerm lex_slice = lex_segment_ideal(p, 3).truncate(5);
  for (const MonomialIdeal& ideal : census_3t2()) {
    ExtensorTerm slice = ideal.truncate(5);
    if (slice == lex_slice) continue;
    CHECK(eisenbud_compare(lex, slice, lex_slice) < 0);
  }

  CHECK_THROWS_AS(eisenbud_compare(degrevlex, gin_term, parse_slice("[x2^2, x1*x2]", 3)),
                  DimensionError);
  CHECK_THROWS_AS(dd_compare(degrevlex, gin_term, parse_slice("[x2^3, x1*x2^2, x1^3]", 3)),
                  DimensionError);
}

TEST_CASE("dd verdicts match the all-bijections oracle") {
  TermOrder degrevlex = TermOrder::degrevlex();
  ExtensorTerm a = parse_slice("[x2^2, x0*x1]", 3);
  ExtensorTerm b = parse_slice("[x1*x2, x0*x2]", 3);
  CHECK(dd_oracle(degrevlex, a, b) == DdVerdict::Incomparable);
  for (DdMethod method : kMethods) {
    CHECK(dd_compare(degrevlex, a, b, method) == DdVerdict::Incomparable);
    CHECK(dd_compare(degrevlex, a, a, method) == DdVerdict::Equal);
  }

  std::vector<TermOrder> orders = {TermOrder::degrevlex(), TermOrder::deglex(), TermOrder::lex(),
                                   TermOrder::weight({1, 2, 9, 12})};
  Rng rng(101);
  for (int trial = 0; trial < 250; ++trial) {
    for (const TermOrder& order : orders) {
      int nvars = 4;
      int degree = 2 + static_cast<int>(rng.below(3));
      int q = 1 + static_cast<int>(rng.below(5));
      ExtensorTerm s = random_subset_slice(rng, nvars, degree, q);
      ExtensorTerm t = random_subset_slice(rng, nvars, degree, q);
      DdVerdict expected = dd_oracle(order, s, t);
      for (DdMethod method : kMethods) CHECK(dd_compare(order, s, t, method) == expected);
      if (expected == DdVerdict::Equal) CHECK(s == t);

      // The total order refines the partial one.
      int e = eisenbud_compare(order, s, t);
      if (expected == DdVerdict::FirstBelow) CHECK(e < 0);
      if (expected == DdVerdict::SecondBelow) CHECK(e > 0);
      if (expected == DdVerdict::Equal) CHECK(e == 0);
    }
  }
}

TEST_CASE("dd is a partial order") {
  TermOrder degrevlex = TermOrder::degrevlex();
  Rng rng(202);
  for (int trial = 0; trial < 400; ++trial) {
    int degree = 2 + static_cast<int>(rng.below(3));
    int q = 2 + static_cast<int>(rng.below(7));
    ExtensorTerm a = random_subset_slice(rng, 4, degree, q);
    ExtensorTerm b = random_subset_slice(rng, 4, degree, q);
    ExtensorTerm c = random_subset_slice(rng, 4, degree, q);

    CHECK(dd_compare(degrevlex, a, a) == DdVerdict::Equal);

    DdVerdict ab = dd_compare(degrevlex, a, b);
    DdVerdict ba = dd_compare(degrevlex, b, a);
    switch (ab) {
      case DdVerdict::Equal:
        CHECK(a == b);
        CHECK(ba == DdVerdict::Equal);
        break;
      case DdVerdict::FirstBelow:
        CHECK(ba == DdVerdict::SecondBelow);
        break;
      case DdVerdict::SecondBelow:
        CHECK(ba == DdVerdict::FirstBelow);
        break;
      case DdVerdict::Incomparable:
        CHECK(ba == DdVerdict::Incomparable);
        break;
    }

    if (dd_leq(ab) && dd_leq(dd_compare(degrevlex, b, c)))
      CHECK(dd_leq(dd_compare(degrevlex, a, c)));
  }
}

TEST_CASE("census slices under dd") {
  TermOrder degrevlex = TermOrder::degrevlex();
  std::vector<ExtensorTerm> slices = truncations(census_3t2(), 5);
  REQUIRE(slices.size() == 4);

  // census_3t2 order: index 2 holds the dd-maximum member.
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{3}})
    CHECK(dd_compare(degrevlex, slices[i], slices[2]) == DdVerdict::FirstBelow);
  CHECK(maximal_elements(degrevlex, slices) == std::vector<std::size_t>{2});

  // All four methods agree on every ordered census pair.
  for (const ExtensorTerm& s : slices)
    for (const ExtensorTerm& t : slices) {
      DdVerdict expected = dd_compare(degrevlex, s, t, DdMethod::Sorted);
      for (DdMethod method : kMethods) CHECK(dd_compare(degrevlex, s, t, method) == expected);
      int e = eisenbud_compare(degrevlex, s, t);
      if (expected == DdVerdict::FirstBelow) CHECK(e < 0);
      if (expected == DdVerdict::SecondBelow) CHECK(e > 0);
      if (expected == DdVerdict::Equal) CHECK(e == 0);
    }
}

TEST_CASE("maximal census members under three orders") {
  const std::vector<MonomialIdeal>& census = census_7t5();
  REQUIRE(census.size() == 112);
  std::vector<ExtensorTerm> slices = truncations(census, 16);

  auto saturation_texts = [&](const std::vector<std::size_t>& indices) {
    std::set<std::string> out;
    for (std::size_t i : indices) out.insert(format_ideal(census[i]));
    return out;
  };

  std::vector<std::size_t> top_degrevlex = maximal_elements(TermOrder::degrevlex(), slices);
  CHECK(top_degrevlex.size() == 4);
  CHECK(std::is_sorted(top_degrevlex.begin(), top_degrevlex.end()));
  CHECK(saturation_texts(top_degrevlex) ==
        std::set<std::string>{
            format_ideal(parse_ideal("x3^3, x3^2*x2, x3*x2^2, x3^2*x1, x2^5", 4)),
            format_ideal(parse_ideal("x3^2, x3*x2^3, x2^4", 4)),
            format_ideal(parse_ideal(
                "x3^3, x3^2*x2^2, x3*x2^3, x3^2*x2*x1, x3*x2^2*x1, x3^2*x1^2, x3*x2*x1^2, x3*x1^3, x2^7",
                4)),
            format_ideal(parse_ideal("x3^3, x3^2*x2, x3*x2^2, x3^2*x1^2, x3*x2*x1^2, x2^6", 4))});

  std::vector<std::size_t> top_weight = maximal_elements(TermOrder::weight({1, 2, 9, 12}), slices);
  CHECK(top_weight.size() == 2);
  CHECK(saturation_texts(top_weight) ==
        std::set<std::string>{
            format_ideal(parse_ideal("x3^3, x3^2*x2, x3*x2^2, x3^2*x1, x2^5", 4)),
            format_ideal(parse_ideal("x3^2, x3*x2^3, x2^4", 4))});

  std::vector<std::size_t> top_deglex = maximal_elements(TermOrder::deglex(), slices);
  CHECK(top_deglex.size() == 1);
  CHECK(census[top_deglex[0]] == lex_segment_ideal(HilbertPolynomial::parse("7t-5"), 3));

  CHECK(maximal_elements(TermOrder::degrevlex(), {}).empty());
}

TEST_CASE("persistence of dd verdicts one degree up") {
  TermOrder degrevlex = TermOrder::degrevlex();
  std::vector<ExtensorTerm> low = truncations(census_3t2(), 5);
  std::vector<ExtensorTerm> high = truncations(census_3t2(), 6);

  PersistenceReport that = check_persistence(degrevlex, low[0], low[2]);
  CHECK(that.persistent);
  CHECK(that.verdict_low == DdVerdict::FirstBelow);
  CHECK(that.verdict_high == DdVerdict::FirstBelow);

  for (std::size_t i = 0; i < low.size(); ++i)
    for (std::size_t j = i + 1; j < low.size(); ++j) {
      PersistenceReport at_r = check_persistence(degrevlex, low[i], low[j]);
      CHECK(at_r.persistent);
      PersistenceReport at_r1 = check_persistence(degrevlex, high[i], high[j]);
      CHECK(at_r1.persistent);
      CHECK(at_r.verdict_high == at_r1.verdict_low);
    }

  // Expansion agrees with truncation on ideal slices, so the persistence
  // verdicts above compare the true next-degree slices.
  CHECK(ek_expand(low[1]) == high[1]);
  CHECK(ek_expand(low[2]) == high[2]);
}

TEST_CASE("degrevlex persistence across the degree 16 census") {
  TermOrder degrevlex = TermOrder::degrevlex();
  const std::vector<MonomialIdeal>& census = census_7t5();
  std::vector<ExtensorTerm> low = truncations(census, 16);
  std::vector<ExtensorTerm> high = truncations(census, 17);

  for (std::size_t i = 0; i < census.size(); ++i)
    for (std::size_t j = i + 1; j < census.size(); ++j)
      CHECK(dd_compare(degrevlex, low[i], low[j]) == dd_compare(degrevlex, high[i], high[j]));

  // Spot-check the reporting wrapper on the first few pairs.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      PersistenceReport report = check_persistence(degrevlex, low[i], low[j]);
      CHECK(report.persistent);
      CHECK(report.verdict_low == dd_compare(degrevlex, low[i], low[j]));
    }
}

TEST_CASE("constant polynomial persistence holds for every order") {
  std::vector<TermOrder> orders = {TermOrder::degrevlex(), TermOrder::deglex(), TermOrder::lex(),
                                   TermOrder::weight({1, 2, 3})};
  std::vector<MonomialIdeal> census = enumerate_borel(HilbertPolynomial::constant(3), 2);
  REQUIRE(census.size() == 2);
  for (const TermOrder& order : orders) {
    for (int m : {3, 4}) {
      PersistenceReport report =
          check_persistence(order, census[0].truncate(m), census[1].truncate(m));
      CHECK(report.persistent);
    }
  }

  std::vector<MonomialIdeal> point_pair = enumerate_borel(HilbertPolynomial::constant(2), 2);
  REQUIRE(point_pair.size() == 1);
  ExtensorTerm only = point_pair[0].truncate(2);
  PersistenceReport self = check_persistence(TermOrder::deglex(), only, only);
  CHECK(self.persistent);
  CHECK(self.verdict_low == DdVerdict::Equal);
}

TEST_CASE("deglex persistence outcomes are reported not enforced") {
  TermOrder deglex = TermOrder::deglex();
  std::vector<ExtensorTerm> low = truncations(census_3t2(), 5);
  int breaks = 0;
  for (std::size_t i = 0; i < low.size(); ++i)
    for (std::size_t j = i + 1; j < low.size(); ++j) {
      PersistenceReport report = check_persistence(deglex, low[i], low[j]);
      CHECK(report.persistent == (report.verdict_low == report.verdict_high));
      if (!report.persistent) ++breaks;
    }
  // Either outcome is acceptable; the loop only proves the check runs.
  CHECK(breaks >= 0);
}

TEST_CASE("persistence input validation") {
  TermOrder degrevlex = TermOrder::degrevlex();
  ExtensorTerm crooked = parse_slice("[x1*x2, x0*x2]", 3);
  ExtensorTerm closed = parse_slice("[x2^2, x1*x2]", 3);
  CHECK_THROWS_AS(check_persistence(degrevlex, crooked, closed), UnsupportedInputError);
  // Borel-closed, same shape, different growth vectors.
  ExtensorTerm spread = parse_slice("[x2^2, x1*x2, x0*x2]", 3);
  ExtensorTerm packed = parse_slice("[x2^2, x1*x2, x1^2]", 3);
  CHECK_THROWS_AS(check_persistence(degrevlex, spread, packed), AdmissibilityError);
}
