#ifndef DGIN_REPORT_HPP
#define DGIN_REPORT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgin/census.hpp"
#include "dgin/extorder.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"
#include "dgin/term_order.hpp"

namespace dgin {

/// One census member with the data the component bounds are read from.
struct CensusRecord {
  MonomialIdeal ideal; // saturated
  DegreeSlice slice;   // its degree-r piece
  int regularity = 0;
  std::vector<long long> hilbert;        // H_{S/ideal}(0..r)
  std::optional<MonomialIdeal> x0x1_sat; // only in 4 or more variables
};

/// Census of saturated Borel-fixed ideals with Hilbert polynomial p,
/// together with the maximal degree-r slices under the given term order
/// and the component lower bounds they certify.  Every maximal slice is a
/// candidate double-generic initial term: any GL-stable component through
/// it has it as its top slice.
struct CensusReport {
  std::string p_text;
  int n = 0;
  TermOrder order = TermOrder::degrevlex();
  long r = 0;
  std::vector<CensusRecord> records;
  std::vector<std::size_t> maximal;  // ascending indices into records
  std::size_t lex_index = 0;         // the lex-segment member
  int bound_basic = 0;               // number of maximal slices
  std::optional<int> bound_refined;  // basic+1 when the saturation test applies
};

/// Runs the census, slices at the Gotzmann number, finds the maximal
/// slices and sets the bounds.  bound_refined is set only in 4 or more
/// variables, when the lex segment is not itself maximal and every
/// maximal member's x0,x1-saturation differs from the lex segment's.
/// Per-ideal post-processing is spread over the given number of threads;
/// the result does not depend on jobs.
CensusReport component_lower_bound(const HilbertPolynomial& p, int n, const TermOrder& order,
                                   int jobs = 1);

struct FilterPartition {
  std::vector<DdVerdict> verdicts;        // one per census slice, against the candidate
  std::vector<std::size_t> possibly_on;   // slice equal to or below the candidate
  std::vector<std::size_t> excluded;      // provably off any component topped by it
};

/// Necessary-condition filter: a Borel slice can lie on a GL-stable
/// component only if it sits below the component's top slice.  The
/// candidate must itself be drawn from the census.
FilterPartition necessary_condition_filter(const std::vector<DegreeSlice>& census,
                                           const DegreeSlice& g_slice, const TermOrder& order);

/// Maximal Hilbert functions across a census (degrevlex by construction,
/// the hypothesis under which slice comparability forces pointwise
/// Hilbert-function comparability).
struct MaxHilbertReport {
  CensusReport census;
  std::vector<std::size_t> hf_maximal;  // members with pointwise-maximal H_{S/I}
  long long comparable_pairs = 0;       // slice-comparable unordered pairs checked
  std::vector<std::array<std::size_t, 2>> violations; // {lower, higher} pairs breaking the law
};

/// Tabulates H_{S/I}(0..r) over the census under degrevlex, reports the
/// members of pointwise-maximal Hilbert function, and verifies on every
/// comparable slice pair that the lower slice has the pointwise-smaller
/// Hilbert function.
MaxHilbertReport max_hilbert_function(const HilbertPolynomial& p, int n, int jobs = 1);

/// Evidence for the minimality conjecture: under deglex the lex segment
/// should be the unique maximal slice and its Hilbert function the
/// pointwise minimum over the census.  The check reports what it finds
/// and never asserts.
struct ConjectureReport {
  CensusReport census; // deglex
  std::size_t lex_index = 0;
  bool lex_unique_max = false;
  std::vector<std::size_t> counterexamples; // some H value strictly below the lex member's
  bool consistent = false;
};

ConjectureReport conjecture_min_deglex_check(const HilbertPolynomial& p, int n, int jobs = 1);

nlohmann::ordered_json census_report_to_json(const CensusReport& report);
nlohmann::ordered_json max_hilbert_report_to_json(const MaxHilbertReport& report);
nlohmann::ordered_json conjecture_report_to_json(const ConjectureReport& report);

} // namespace dgin

#endif
