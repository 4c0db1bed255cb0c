#include <doctest.h>

#include <vector>

#include "dgin/errors.hpp"
#include "dgin/monomial.hpp"
#include "dgin/rng.hpp"
#include "dgin/term_order.hpp"

using namespace dgin;

namespace {

Monomial m(std::vector<int> exps) { return Monomial(std::move(exps)); }

Monomial random_monomial(Rng& rng, int nvars, int degree) {
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  for (int i = 0; i < degree; ++i) ++exps[rng.below(static_cast<std::uint64_t>(nvars))];
  return Monomial(std::move(exps));
}

std::vector<TermOrder> all_orders() {
  return {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex(),
          TermOrder::weight({1, 2, 9, 12}), TermOrder::weight({1, 1, 1, 1})};
}

} // namespace

TEST_CASE("defining comparisons") {
  TermOrder degrevlex = TermOrder::degrevlex();
  TermOrder deglex = TermOrder::deglex();
  // Smallest differing index decides for degrevlex, largest for deglex.
  CHECK(degrevlex.less(m({1, 0, 1}), m({0, 2, 0})));
  CHECK(deglex.less(m({0, 2, 0}), m({1, 0, 1})));
  CHECK(degrevlex.compare(m({1, 0, 1}), m({1, 0, 1})) == 0);

  // Graded kinds put lower degree first; pure lex does not.
  TermOrder lex = TermOrder::lex();
  CHECK(deglex.less(m({3, 0, 0}), m({0, 0, 4})));
  CHECK(degrevlex.less(m({3, 0, 0}), m({0, 0, 4})));
  CHECK(lex.less(m({3, 0, 0}), m({0, 1, 0})));
  CHECK(lex.greater(m({0, 1, 0}), m({9, 0, 0})));

  // Variables ascend with their index in every configured order.
  for (const TermOrder& order : all_orders())
    for (int i = 0; i + 1 < 4; ++i)
      CHECK(order.less(Monomial::variable(4, i), Monomial::variable(4, i + 1)));
}

TEST_CASE("weight order with deglex tie break") {
  TermOrder w = TermOrder::weight({1, 2, 9, 12});
  // Degree first, then the dot product.
  CHECK(w.less(m({0, 0, 1, 0}), m({2, 2, 0, 0})));
  CHECK(w.less(m({1, 1, 0, 0}), m({0, 0, 1, 1})));
  // Flat weights tie on every same-degree pair, so the tie break is the
  // whole order: it must agree with deglex everywhere.
  TermOrder flat = TermOrder::weight({1, 1, 1, 1});
  TermOrder deglex = TermOrder::deglex();
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Monomial a = random_monomial(rng, 4, static_cast<int>(rng.below(7)));
    Monomial b = random_monomial(rng, 4, static_cast<int>(rng.below(7)));
    CHECK(flat.compare(a, b) == deglex.compare(a, b));
  }

  CHECK_THROWS_AS(TermOrder::weight({1, 0, 2, 3}), AdmissibilityError);
  CHECK_THROWS_AS(TermOrder::weight({}), AdmissibilityError);
  // Decreasing weights would put a larger variable below a smaller one.
  CHECK_THROWS_AS(TermOrder::weight({2, 1, 3}), AdmissibilityError);
}

TEST_CASE("order text round trip") {
  CHECK(TermOrder::parse("degrevlex", 4).text() == "degrevlex");
  CHECK(TermOrder::parse("deglex", 4).text() == "deglex");
  CHECK(TermOrder::parse("lex", 4).text() == "lex");
  CHECK(TermOrder::parse("weight:1,2,9,12", 4).text() == "weight:1,2,9,12");
  CHECK_THROWS_AS(TermOrder::parse("weight:1,2", 4), ParseError);
  CHECK_THROWS_AS(TermOrder::parse("grevlex", 4), ParseError);
  CHECK_THROWS_AS(TermOrder::parse("weight:1,2,x,4", 4), ParseError);
}

TEST_CASE("order laws on random monomials") {
  Rng rng(77);
  for (const TermOrder& order : all_orders()) {
    for (int trial = 0; trial < 400; ++trial) {
      int da = static_cast<int>(rng.below(6));
      Monomial a = random_monomial(rng, 4, da);
      Monomial b = random_monomial(rng, 4, static_cast<int>(rng.below(6)));
      Monomial c = random_monomial(rng, 4, static_cast<int>(rng.below(4)));

      // Totality and antisymmetry.
      int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      if (a == b) CHECK(ab == 0);
      if (ab == 0) CHECK(a == b);

      // Multiplicativity.
      if (ab < 0) CHECK(order.less(a * c, b * c));

      // Transitivity.
      Monomial d = random_monomial(rng, 4, static_cast<int>(rng.below(6)));
      if (ab < 0 && order.less(b, d)) CHECK(order.less(a, d));
    }
  }
}

TEST_CASE("mismatched variable counts are rejected") {
  TermOrder degrevlex = TermOrder::degrevlex();
  CHECK_THROWS_AS(degrevlex.compare(m({1, 0}), m({1, 0, 0})), DimensionError);
}
