#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgin/ideal.hpp"
#include "dgin/term_order.hpp"

namespace dgin {

// A DegreeSlice doubles as an extensor term t1 ^ ... ^ tq in normal
// expression: the wedge of its members listed strictly descending.
using ExtensorTerm = DegreeSlice;

// Lexicographic comparison of the descending member lists; a total order.
// Returns -1, 0 or 1.
int eisenbud_compare(const TermOrder& order, const ExtensorTerm& a, const ExtensorTerm& b);

enum class DdMethod { Sorted, Counting, SymmDiff, Matching };

DdMethod parse_dd_method(const std::string& text);
std::string dd_method_text(DdMethod method);

enum class DdVerdict { Equal, FirstBelow, SecondBelow, Incomparable };

std::string dd_verdict_text(DdVerdict v);

// The dd partial order: A is below B when some bijection A -> B never
// decreases a member. The four methods are provably equivalent tests and
// must agree; Sorted is the cheap default, the others serve as oracles.
DdVerdict dd_compare(const TermOrder& order, const ExtensorTerm& a, const ExtensorTerm& b,
                     DdMethod method = DdMethod::Sorted);

// Indices of members not strictly dd-below any other member, in input order.
std::vector<std::size_t> maximal_elements(const TermOrder& order,
                                          const std::vector<ExtensorTerm>& slices);

struct PersistenceReport {
  DdVerdict verdict_low;   // at the slices' own degree
  DdVerdict verdict_high;  // after one expansion step
  bool persistent;         // the verdicts agree
};

// Compares two Borel-closed slices with equal growth vectors at their own
// degree and again one degree up.
PersistenceReport check_persistence(const TermOrder& order, const ExtensorTerm& a,
                                    const ExtensorTerm& b);

} // namespace dgin
