#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "dgin/errors.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"
#include "dgin/monomial.hpp"
#include "dgin/rng.hpp"
#include "dgin/term_order.hpp"

using namespace dgin;

namespace {

long long dim_ambient(int nvars, long t) {
  if (t < 0) return 0;
  long long out = 1;
  for (int i = 1; i < nvars; ++i) out = out * (t + i) / i;
  return out;
}

// Inclusion-exclusion over the generator lcm lattice.  Independent of the
// library's divisibility scan.
long long hf_oracle(const MonomialIdeal& ideal, long t) {
  const auto& gens = ideal.generators();
  const std::size_t k = gens.size();
  REQUIRE(k <= 20);
  long long total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> lcm(static_cast<std::size_t>(ideal.nvars()), 0);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      for (int v = 0; v < ideal.nvars(); ++v)
        lcm[static_cast<std::size_t>(v)] =
            std::max(lcm[static_cast<std::size_t>(v)], gens[i].exponent(v));
    }
    int deg = 0;
    for (int e : lcm) deg += e;
    long long count = dim_ambient(ideal.nvars(), t - deg);
    total += bits % 2 == 0 ? count : -count;
  }
  return total;
}

std::set<std::string> slice_texts(const DegreeSlice& slice) {
  std::set<std::string> out;
  for (const Monomial& m : slice.monomials()) out.insert(format_monomial(m));
  return out;
}

// A few random seed monomials closed upward under the stable exchanges.
DegreeSlice random_borel_slice(Rng& rng, int nvars, int degree) {
  std::vector<Monomial> all = all_monomials(nvars, degree);
  std::set<std::vector<int>> picked;
  int seeds = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < seeds; ++i)
    picked.insert(all[rng.below(all.size())].exponents());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = picked;
    for (const std::vector<int>& exps : picked)
      for (const Monomial& b : Monomial(std::vector<int>(exps)).borel_moves())
        if (next.insert(b.exponents()).second) grew = true;
    picked = std::move(next);
  }
  std::vector<Monomial> members;
  members.reserve(picked.size());
  for (const std::vector<int>& exps : picked)
    members.push_back(Monomial(std::vector<int>(exps)));
  return DegreeSlice(nvars, degree, std::move(members));
}

} // namespace

TEST_CASE("minimalization and membership") {
  MonomialIdeal ideal = parse_ideal("x2^2, x2^3, x1*x2^2, x1^2", 3);
  CHECK(ideal.generators().size() == 2); // x2^3 and x1*x2^2 are redundant
  CHECK(ideal.contains(parse_monomial("x1^2*x2", 3)));
  CHECK_FALSE(ideal.contains(parse_monomial("x1*x2", 3)));
  CHECK(MonomialIdeal::unit(3).contains(parse_monomial("1", 3)));
  CHECK(format_ideal(MonomialIdeal(3)) == "0");
  CHECK(parse_ideal("x1, x2", 3) == parse_ideal("x2, x1", 3));
}

TEST_CASE("borel fixedness") {
  CHECK(parse_ideal("x2, x1^2", 3).is_borel_fixed());
  CHECK_FALSE(parse_ideal("x1, x2^2", 3).is_borel_fixed());
  CHECK(parse_ideal("x3^2, x2*x3, x2^3, x1*x2^2", 4).is_borel_fixed());
  CHECK(MonomialIdeal::unit(3).is_borel_fixed());
  CHECK(MonomialIdeal(3).is_borel_fixed());
}

TEST_CASE("truncation slices") {
  MonomialIdeal ideal = parse_ideal("x2, x1^2", 3);
  DegreeSlice slice = ideal.truncate(2);
  CHECK(slice_texts(slice) ==
        std::set<std::string>{"x2^2", "x2*x1", "x2*x0", "x1^2"});
  CHECK(slice.is_borel_closed());
  CHECK(slice_texts(parse_ideal("x3", 4).truncate(1)) == std::set<std::string>{"x3"});
  CHECK(MonomialIdeal::unit(3).truncate(0).size() == 1);

  MonomialIdeal b4 = parse_ideal("x3^2, x2*x3, x2^3, x1*x2^2", 4);
  for (int m = 2; m <= 5; ++m) {
    DegreeSlice t = b4.truncate(m);
    CHECK(t.is_borel_closed());
    CHECK(static_cast<long long>(t.size()) == dim_ambient(4, m) - hf_oracle(b4, m));
  }
}

TEST_CASE("eliahou kervaire expansion") {
  DegreeSlice single = parse_slice("[x2^2]", 3);
  CHECK(slice_texts(ek_expand(single)) ==
        std::set<std::string>{"x2^3", "x2^2*x1", "x2^2*x0"});

  DegreeSlice unit_slice = MonomialIdeal::unit(3).truncate(0);
  DegreeSlice linear = ek_expand(unit_slice);
  CHECK(linear.size() == 3);
  CHECK(slice_texts(linear) ==
        slice_texts(DegreeSlice(3, 1, all_monomials(3, 1))));

  DegreeSlice quad = parse_ideal("x2, x1^2", 3).truncate(2);
  DegreeSlice ek = ek_expand(quad);
  CHECK(ek.size() == 8);
  CHECK(slice_texts(ek) == slice_texts(expand(quad)));

  DegreeSlice crooked = parse_slice("[x1*x2]", 3);
  CHECK_FALSE(crooked.is_borel_closed());
  CHECK_THROWS_AS(ek_expand(crooked), UnsupportedInputError);
  CHECK(expand(crooked).size() == 3);

  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    DegreeSlice s = random_borel_slice(rng, 3 + static_cast<int>(rng.below(2)),
                                       2 + static_cast<int>(rng.below(4)));
    REQUIRE(s.is_borel_closed());
    long expected = 0;
    for (const Monomial& m : s.monomials()) expected += m.min_var() + 1;
    DegreeSlice grown = ek_expand(s);
    CHECK(static_cast<long>(grown.size()) == expected);
    CHECK(slice_texts(grown) == slice_texts(expand(s)));
    CHECK(grown.is_borel_closed());
  }
}

TEST_CASE("growth vectors") {
  CHECK(growth_vector(parse_ideal("x2, x1^2", 3).truncate(2)) == std::vector<long>{1, 2, 1});
  CHECK(growth_vector(parse_slice("[x2^2, x1*x2]", 3)) == std::vector<long>{0, 1, 1});
  CHECK_THROWS_AS(growth_vector(MonomialIdeal::unit(3).truncate(0)), DimensionError);
}

TEST_CASE("hilbert functions against the inclusion-exclusion oracle") {
  MonomialIdeal b4 = parse_ideal("x3^2, x2*x3, x2^3, x1*x2^2", 4);
  CHECK(b4.hilbert_function_range(4) == std::vector<long long>{1, 4, 8, 11, 14});
  CHECK(b4.hilbert_polynomial().text() == "3t+2");

  MonomialIdeal b1 = parse_ideal("x3, x2^4, x1^2*x2^3", 4);
  CHECK(b1.hilbert_function(2) == 6);
  CHECK(b1.hilbert_function(3) == 10);
  CHECK(b1.hilbert_polynomial().text() == "3t+2");

  MonomialIdeal reg_example = parse_ideal("x2^2, x1*x2", 3);
  CHECK(reg_example.hilbert_polynomial().text() == "t+2");

  for (const char* text : {"x3^2, x2*x3, x2^3, x1*x2^2", "x3, x2^4, x1^2*x2^3"}) {
    MonomialIdeal ideal = parse_ideal(text, 4);
    for (long t = 0; t <= 8; ++t) CHECK(ideal.hilbert_function(t) == hf_oracle(ideal, t));
  }
  for (long t = 0; t <= 8; ++t)
    CHECK(reg_example.hilbert_function(t) == hf_oracle(reg_example, t));

  // Non-Borel input exercises the interpolation fallback.
  MonomialIdeal crooked = parse_ideal("x1*x2", 3);
  CHECK_FALSE(crooked.is_borel_fixed());
  CHECK(crooked.hilbert_polynomial().text() == "2t+1");
  for (long t = 0; t <= 6; ++t) CHECK(crooked.hilbert_function(t) == hf_oracle(crooked, t));
}

TEST_CASE("saturation") {
  SaturationResult degenerate = saturate(parse_ideal("x2^2, x1*x2, x0^2*x2, x0^4", 3));
  CHECK(degenerate.degenerate);
  CHECK(degenerate.ideal.is_unit());

  MonomialIdeal fixed = parse_ideal("x3^2, x2*x3, x1*x3, x2^4, x1*x2^3", 4);
  SaturationResult unchanged = saturate(fixed);
  CHECK_FALSE(unchanged.degenerate);
  CHECK(unchanged.ideal == fixed);

  MonomialIdeal b1 = parse_ideal("x3, x2^4, x1^2*x2^3", 4);
  MonomialIdeal spanned(4, b1.truncate(5).monomials());
  SaturationResult once = saturate(spanned);
  CHECK(once.ideal == b1);
  CHECK(saturate(once.ideal).ideal == once.ideal);
  for (long t = 0; t <= 8; ++t)
    CHECK(once.ideal.hilbert_function(t) <= spanned.hilbert_function(t));

  CHECK_THROWS_AS(saturate(parse_ideal("x1, x2^2", 3)), UnsupportedInputError);
}

TEST_CASE("x0 x1 saturation") {
  CHECK(x0x1_saturation(parse_ideal("x3, x2^8, x2^7*x1^9", 4)) == parse_ideal("x3, x2^7", 4));
  MonomialIdeal fixed = parse_ideal("x3^2, x3*x2^3, x2^4", 4);
  CHECK(x0x1_saturation(fixed) == fixed);
  CHECK(x0x1_saturation(parse_ideal("x3^2*x1, x2^5", 4)) == parse_ideal("x3^2, x2^5", 4));
  CHECK_THROWS_AS(x0x1_saturation(parse_ideal("x2, x1^2", 3)), DimensionError);
}

TEST_CASE("regularity") {
  CHECK(parse_ideal("x2^2, x1*x2, x1^3", 3).regularity() == 3);
  CHECK(parse_ideal("x2^2, x1*x2, x0^2*x2, x1^4", 3).regularity() == 4);
  CHECK(parse_ideal("x3", 4).regularity() == 1);
  CHECK_THROWS_AS(parse_ideal("x1, x2^2", 3).regularity(), UnsupportedInputError);
}

TEST_CASE("slice text round trip") {
  DegreeSlice slice = parse_slice("[x2^2, x1*x2, x0*x2]", 3);
  CHECK(slice.size() == 3);
  CHECK(slice.degree() == 2);
  TermOrder degrevlex = TermOrder::degrevlex();
  CHECK(format_slice(slice, degrevlex) == "[x2^2, x2*x1, x2*x0]");
  CHECK(parse_slice(format_slice(slice, degrevlex), 3) == slice);
  CHECK_THROWS_AS(parse_slice("[x2^2, x1]", 3), DimensionError);
  CHECK_THROWS_AS(parse_slice("[x2^2, x2^2]", 3), DimensionError);
  CHECK_THROWS_AS(parse_slice("x2^2", 3), ParseError);
}
