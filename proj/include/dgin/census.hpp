#ifndef DGIN_CENSUS_HPP
#define DGIN_CENSUS_HPP

#include <vector>

#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"

namespace dgin {

struct CensusLimits {
  /// Cap on the number of degree-r monomials the search may handle.
  long max_ground_set = 200000;
  /// Cap on search-tree nodes before giving up with a ResourceError.
  long long max_nodes = 50000000;
};

/// All saturated Borel-fixed ideals of K[x0..xn] with Hilbert polynomial p,
/// in the canonical order (generator lists compared under degrevlex).
///
/// The search walks the degree-r slice (r the Gotzmann number) from the
/// top monomial downward, assigning each monomial to the slice or its
/// complement.  Slice membership must be closed upward under the
/// strongly-stable exchanges and complement membership downward, and the
/// per-minimal-variable counts of both sides are forced by p and r, which
/// prunes the walk to roughly the size of the answer.
std::vector<MonomialIdeal> enumerate_borel(const HilbertPolynomial& p, int n,
                                           const CensusLimits& limits = CensusLimits{});

/// Canonical comparison used to order census output: generator lists
/// compared entrywise by descending degrevlex, shorter list first on ties.
bool census_ideal_before(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace dgin

#endif
