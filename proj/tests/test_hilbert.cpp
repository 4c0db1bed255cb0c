#include <doctest.h>

#include <vector>

#include "dgin/errors.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"

using namespace dgin;

namespace {

// Independent evaluation oracle: binom(t + a - k, a) computed by the
// falling-product rule on plain integers, no library binomial involved.
long long binom_at(long t, long a, long k) {
  long long top = t + a - k;
  if (a == 0) return 1;
  long long num = 1, den = 1;
  for (long i = 0; i < a; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

long long resum(const GotzmannDecomposition& d, long t) {
  long long total = 0;
  for (std::size_t i = 0; i < d.exponents.size(); ++i)
    total += binom_at(t, d.exponents[i], static_cast<long>(i));
  return total;
}

} // namespace

TEST_CASE("polynomial text and evaluation") {
  HilbertPolynomial p = HilbertPolynomial::parse("7t-5");
  CHECK(p.evaluate(16) == Integer(107));
  CHECK(HilbertPolynomial::parse("3t+2").evaluate(0) == Integer(2));
  CHECK(HilbertPolynomial::parse("2").evaluate(100) == Integer(2));
  CHECK(HilbertPolynomial::parse("t^2+4").evaluate(3) == Integer(13));
  CHECK(p.text() == "7t-5");
  CHECK(HilbertPolynomial::parse("t").text() == "t");
  CHECK(HilbertPolynomial::parse("0").text() == "0");
  CHECK(HilbertPolynomial::parse("2t^2 - t + 1").evaluate(2) == Integer(7));
  CHECK_THROWS_AS(HilbertPolynomial::parse("7q-5"), ParseError);
  CHECK_THROWS_AS(HilbertPolynomial::parse(""), ParseError);
  CHECK_THROWS_AS(HilbertPolynomial::parse("t^"), ParseError);
}

TEST_CASE("gotzmann decomposition") {
  GotzmannDecomposition d = gotzmann_decompose(HilbertPolynomial::parse("7t-5"));
  std::vector<long> expected(7, 1);
  expected.insert(expected.end(), 9, 0);
  CHECK(d.exponents == expected);
  CHECK(d.number() == 16);

  GotzmannDecomposition small = gotzmann_decompose(HilbertPolynomial::parse("3t+2"));
  CHECK(small.exponents == std::vector<long>{1, 1, 1, 0, 0});
  for (long t = 0; t <= 6; ++t) CHECK(resum(small, t) == 3 * t + 2);

  GotzmannDecomposition constant = gotzmann_decompose(HilbertPolynomial::parse("4"));
  CHECK(constant.exponents == std::vector<long>(4, 0));

  CHECK(gotzmann_number(HilbertPolynomial::parse("7t-5")) == 16);
  CHECK(gotzmann_number(HilbertPolynomial::parse("3t+2")) == 5);
  CHECK(gotzmann_number(HilbertPolynomial::parse("2")) == 2);

  // Resummation reproduces every example polynomial well past its length.
  for (const char* text : {"7t-5", "3t+2", "2", "t+1", "4t"}) {
    HilbertPolynomial p = HilbertPolynomial::parse(text);
    GotzmannDecomposition dec = gotzmann_decompose(p);
    for (std::size_t i = 1; i < dec.exponents.size(); ++i)
      CHECK(dec.exponents[i - 1] >= dec.exponents[i]);
    for (long t = 0; t <= dec.number() + 3; ++t)
      CHECK(Integer(static_cast<long>(resum(dec, t))) == p.evaluate(t));
  }

  CHECK_THROWS_AS(gotzmann_decompose(HilbertPolynomial::parse("t^2")), AdmissibilityError);
  CHECK_THROWS_AS(gotzmann_decompose(HilbertPolynomial::parse("-3")), AdmissibilityError);
  CHECK_THROWS_AS(gotzmann_decompose(HilbertPolynomial::parse("0")), AdmissibilityError);
  // Constant polynomials make r = c, so huge constants must hit the cap.
  CHECK_THROWS_AS(gotzmann_decompose(HilbertPolynomial::parse("100000")), ResourceError);
}

TEST_CASE("codimension counts") {
  CHECK(q_codim(HilbertPolynomial::parse("7t-5"), 3, 16) == Integer(862));
  CHECK(q_codim(HilbertPolynomial::parse("3t+2"), 3, 5) == Integer(39));
  CHECK(q_codim(HilbertPolynomial::parse("3t+2"), 3, 6) == Integer(64));
  CHECK(q_codim(HilbertPolynomial::parse("2"), 2, 2) == Integer(4));
}

TEST_CASE("forced growth vectors") {
  CHECK(forced_growth_vector(HilbertPolynomial::parse("7t-5"), 3, 16) ==
        std::vector<long>{716, 129, 16, 1});
  CHECK(forced_growth_vector(HilbertPolynomial::parse("3t+2"), 3, 5) ==
        std::vector<long>{21, 12, 5, 1});
}

TEST_CASE("lex segment ideals") {
  MonomialIdeal big = lex_segment_ideal(HilbertPolynomial::parse("7t-5"), 3);
  CHECK(big == parse_ideal("x3, x2^8, x2^7*x1^9", 4));
  MonomialIdeal small = lex_segment_ideal(HilbertPolynomial::parse("3t+2"), 3);
  CHECK(small == parse_ideal("x3, x2^4, x1^2*x2^3", 4));
  MonomialIdeal points = lex_segment_ideal(HilbertPolynomial::parse("2"), 2);
  CHECK(points == parse_ideal("x2, x1^2", 3));

  for (const MonomialIdeal& ideal : {big, small, points}) CHECK(ideal.is_borel_fixed());
  CHECK(big.hilbert_polynomial().text() == "7t-5");
  CHECK(small.hilbert_polynomial().text() == "3t+2");
  CHECK(points.hilbert_polynomial().text() == "2");

  CHECK_THROWS_AS(lex_segment_ideal(HilbertPolynomial::parse("7t-5"), 1), AdmissibilityError);
}

TEST_CASE("segment ideals under other orders") {
  HilbertPolynomial p = HilbertPolynomial::parse("3t+2");
  auto lex_seg = hilb_segment_ideal(p, 3, TermOrder::lex());
  REQUIRE(lex_seg.has_value());
  CHECK(*lex_seg == lex_segment_ideal(p, 3));

  // Top 4 monomials of S_2 under degrevlex span (x2, x1)^2 + (x0*x2); its
  // expansion oracle decides existence.
  auto points = hilb_segment_ideal(HilbertPolynomial::parse("2"), 2, TermOrder::degrevlex());
  // The slice {x2^2, x1*x2, x1^2, x0*x2} grows to 8 of the 10 cubics, but
  // q(3) for two points is 10 - 2 = 8, so the segment ideal exists here.
  if (points) {
    CHECK(points->hilbert_polynomial().text() == "2");
    CHECK(points->is_borel_fixed());
  }

  // Whenever the segment exists its truncation repeats the defining slice.
  for (const char* order_text : {"lex", "deglex", "degrevlex"}) {
    TermOrder order = TermOrder::parse(order_text, 4);
    auto seg = hilb_segment_ideal(p, 3, order);
    if (!seg) continue;
    CHECK(seg->hilbert_polynomial().text() == p.text());
    CHECK(seg->is_borel_fixed());
  }
}
