#include "dgin/census.hpp"

#include <algorithm>
#include <map>

#include "dgin/errors.hpp"

namespace dgin {

namespace {

enum : signed char { UNDECIDED = 0, IN_SLICE = 1, IN_COMPLEMENT = 2 };

struct Search {
  int nvars = 0;
  std::vector<Monomial> monos;          // ascending degrevlex
  std::vector<int> cls;                 // min-var of each monomial
  std::vector<std::vector<int>> preds;  // adjacent exchanges downward
  std::vector<std::vector<int>> succs;  // adjacent exchanges upward
  std::vector<long> slice_target;       // forced growth vector v
  std::vector<long> comp_target;        // class size minus v
  std::vector<long> slice_count, comp_count, undecided;
  std::vector<signed char> status;
  std::vector<int> trail;
  long long nodes = 0;
  long long node_cap = 0;
  std::vector<std::vector<int>> solutions; // complement index sets... slice sets

  bool counts_feasible() const {
    for (std::size_t c = 0; c < slice_target.size(); ++c) {
      if (slice_count[c] > slice_target[c]) return false;
      if (comp_count[c] > comp_target[c]) return false;
      if (slice_count[c] + undecided[c] < slice_target[c]) return false;
      if (comp_count[c] + undecided[c] < comp_target[c]) return false;
    }
    return true;
  }

  void assign(int idx, signed char st) {
    status[static_cast<std::size_t>(idx)] = st;
    int c = cls[static_cast<std::size_t>(idx)];
    --undecided[static_cast<std::size_t>(c)];
    if (st == IN_SLICE)
      ++slice_count[static_cast<std::size_t>(c)];
    else
      ++comp_count[static_cast<std::size_t>(c)];
    trail.push_back(idx);
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int idx = trail.back();
      trail.pop_back();
      int c = cls[static_cast<std::size_t>(idx)];
      if (status[static_cast<std::size_t>(idx)] == IN_SLICE)
        --slice_count[static_cast<std::size_t>(c)];
      else
        --comp_count[static_cast<std::size_t>(c)];
      ++undecided[static_cast<std::size_t>(c)];
      status[static_cast<std::size_t>(idx)] = UNDECIDED;
    }
  }

  // Mark idx and everything below it (adjacent exchanges, transitively)
  // as complement members.  Nothing below can already sit in the slice:
  // slice assignments only happen at the sweep position, above idx.
  void cascade_complement(int idx) {
    std::vector<int> stack{idx};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (status[static_cast<std::size_t>(cur)] != UNDECIDED) continue;
      assign(cur, IN_COMPLEMENT);
      for (int p : preds[static_cast<std::size_t>(cur)]) stack.push_back(p);
    }
  }

  void run(int pos) {
    if (++nodes > node_cap)
      throw ResourceError("census search exceeded the node cap with " + std::to_string(solutions.size()) +
                          " ideals found so far");
    while (pos >= 0 && status[static_cast<std::size_t>(pos)] != UNDECIDED) --pos;
    if (pos < 0) {
      std::vector<int> slice;
      for (std::size_t i = 0; i < status.size(); ++i)
        if (status[i] == IN_SLICE) slice.push_back(static_cast<int>(i));
      solutions.push_back(std::move(slice));
      return;
    }
    // Branch 1: the monomial joins the slice.  Legal only when all
    // monomials directly above it are already slice members.
    bool closed_up = true;
    for (int s : succs[static_cast<std::size_t>(pos)])
      if (status[static_cast<std::size_t>(s)] != IN_SLICE) {
        closed_up = false;
        break;
      }
    if (closed_up) {
      std::size_t mark = trail.size();
      assign(pos, IN_SLICE);
      if (counts_feasible()) run(pos - 1);
      undo_to(mark);
    }
    // Branch 2: the monomial joins the complement, dragging everything
    // below it along.
    {
      std::size_t mark = trail.size();
      cascade_complement(pos);
      if (counts_feasible()) run(pos - 1);
      undo_to(mark);
    }
  }
};

} // namespace

bool census_ideal_before(const MonomialIdeal& a, const MonomialIdeal& b) {
  const TermOrder order = TermOrder::degrevlex();
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  for (std::size_t i = 0; i < std::min(ga.size(), gb.size()); ++i) {
    int c = order.compare(ga[i], gb[i]);
    if (c != 0) return c > 0;
  }
  return ga.size() < gb.size();
}

std::vector<MonomialIdeal> enumerate_borel(const HilbertPolynomial& p, int n, const CensusLimits& limits) {
  if (n < 1) throw DimensionError("ambient dimension must be at least 1");
  GotzmannDecomposition decomp = gotzmann_decompose(p);
  if (decomp.exponents.front() > n - 1)
    throw AdmissibilityError("polynomial degree " + std::to_string(decomp.exponents.front()) +
                             " is not below the ambient dimension " + std::to_string(n));
  const long r = decomp.number();
  Integer p_r = p.evaluate(r);
  if (p_r < 1) throw AdmissibilityError("polynomial is not positive at its Gotzmann number");
  Integer ground = binomial(n + r, n);
  if (ground > limits.max_ground_set)
    throw ResourceError("degree-" + std::to_string(r) + " slice has " + to_string(ground) +
                        " monomials, above the ground-set cap of " + std::to_string(limits.max_ground_set));

  Search search;
  search.nvars = n + 1;
  search.node_cap = limits.max_nodes;
  search.monos = all_monomials(n + 1, static_cast<int>(r));
  const TermOrder order = TermOrder::degrevlex();
  std::sort(search.monos.begin(), search.monos.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); });

  const int count = static_cast<int>(search.monos.size());
  std::map<Monomial, int, MonomialTupleLess> index;
  for (int i = 0; i < count; ++i) index.emplace(search.monos[static_cast<std::size_t>(i)], i);

  search.cls.resize(static_cast<std::size_t>(count));
  search.preds.resize(static_cast<std::size_t>(count));
  search.succs.resize(static_cast<std::size_t>(count));
  std::vector<long> class_size(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < count; ++i) {
    const Monomial& m = search.monos[static_cast<std::size_t>(i)];
    int c = m.min_var();
    search.cls[static_cast<std::size_t>(i)] = c;
    ++class_size[static_cast<std::size_t>(c)];
    // adjacent exchanges x_k -> x_{k+1} upward
    for (int k = 0; k + 1 <= n; ++k) {
      if (m.exponent(k) == 0) continue;
      std::vector<int> e = m.exponents();
      --e[static_cast<std::size_t>(k)];
      ++e[static_cast<std::size_t>(k) + 1];
      int j = index.at(Monomial(std::move(e)));
      search.succs[static_cast<std::size_t>(i)].push_back(j);
      search.preds[static_cast<std::size_t>(j)].push_back(i);
    }
  }

  search.slice_target = forced_growth_vector(p, n, r);
  search.comp_target.resize(search.slice_target.size());
  for (std::size_t c = 0; c < search.slice_target.size(); ++c) {
    search.comp_target[c] = class_size[c] - search.slice_target[c];
    if (search.comp_target[c] < 0)
      throw AdmissibilityError("forced growth vector exceeds the class of monomials with minimal variable x" +
                               std::to_string(c));
  }
  search.slice_count.assign(search.slice_target.size(), 0);
  search.comp_count.assign(search.slice_target.size(), 0);
  search.undecided = class_size;
  search.status.assign(static_cast<std::size_t>(count), UNDECIDED);

  search.run(count - 1);

  std::vector<MonomialIdeal> out;
  out.reserve(search.solutions.size());
  for (const std::vector<int>& slice : search.solutions) {
    std::vector<Monomial> gens;
    gens.reserve(slice.size());
    for (int i : slice) gens.push_back(search.monos[static_cast<std::size_t>(i)]);
    SaturationResult sat = saturate(MonomialIdeal(n + 1, std::move(gens)));
    if (sat.degenerate) throw Error("internal: census member saturated to the unit ideal");
    out.push_back(std::move(sat.ideal));
  }
  std::sort(out.begin(), out.end(), census_ideal_before);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw Error("internal: duplicate census member");
  return out;
}

} // namespace dgin
