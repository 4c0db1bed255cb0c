#include "dgin/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "dgin/errors.hpp"

namespace dgin {

namespace {

// Runs fn(i) for i in [0, count), spread over up to `jobs` threads.  Each
// index is handled exactly once, so results written to slot i never depend
// on the schedule.  The first exception wins and is rethrown on the caller.
void run_parallel(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
  if (jobs < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

bool pointwise_leq(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

} // namespace

CensusReport component_lower_bound(const HilbertPolynomial& p, int n, const TermOrder& order,
                                   int jobs) {
  CensusReport report;
  report.p_text = p.text();
  report.n = n;
  report.order = order;
  report.r = gotzmann_number(p);
  std::vector<MonomialIdeal> ideals = enumerate_borel(p, n);
  const int nvars = n + 1;
  const std::vector<long> forced = forced_growth_vector(p, n, report.r);

  std::vector<std::optional<CensusRecord>> slots(ideals.size());
  run_parallel(jobs, ideals.size(), [&](std::size_t i) {
    const MonomialIdeal& ideal = ideals[i];
    CensusRecord rec{ideal, ideal.truncate(static_cast<int>(report.r)), ideal.regularity(),
                     ideal.hilbert_function_range(report.r), std::nullopt};
    if (growth_vector(rec.slice) != forced)
      throw Error("internal: census member breaks the forced growth vector");
    if (nvars >= 4) rec.x0x1_sat = x0x1_saturation(ideal);
    slots[i] = std::move(rec);
  });
  report.records.reserve(slots.size());
  for (auto& slot : slots) report.records.push_back(std::move(*slot));

  std::vector<DegreeSlice> slices;
  slices.reserve(report.records.size());
  for (const auto& rec : report.records) slices.push_back(rec.slice);
  report.maximal = maximal_elements(order, slices);
  report.bound_basic = static_cast<int>(report.maximal.size());

  const MonomialIdeal lambda = lex_segment_ideal(p, n);
  auto lex_it = std::find_if(report.records.begin(), report.records.end(),
                             [&](const CensusRecord& rec) { return rec.ideal == lambda; });
  if (lex_it == report.records.end())
    throw Error("internal: the lex segment is missing from the census");
  report.lex_index = static_cast<std::size_t>(lex_it - report.records.begin());

  bool lex_is_maximal =
      std::find(report.maximal.begin(), report.maximal.end(), report.lex_index) !=
      report.maximal.end();
  if (n > 2 && !lex_is_maximal) {
    const MonomialIdeal lambda_x0x1 = x0x1_saturation(lambda);
    bool all_differ = true;
    for (std::size_t idx : report.maximal) {
      if (*report.records[idx].x0x1_sat == lambda_x0x1) {
        all_differ = false;
        break;
      }
    }
    if (all_differ) report.bound_refined = report.bound_basic + 1;
  }
  return report;
}

FilterPartition necessary_condition_filter(const std::vector<DegreeSlice>& census,
                                           const DegreeSlice& g_slice, const TermOrder& order) {
  if (std::find(census.begin(), census.end(), g_slice) == census.end())
    throw AdmissibilityError("the candidate slice is not a census member");
  FilterPartition part;
  part.verdicts.reserve(census.size());
  for (std::size_t i = 0; i < census.size(); ++i) {
    DdVerdict verdict = dd_compare(order, census[i], g_slice);
    part.verdicts.push_back(verdict);
    if (verdict == DdVerdict::Equal || verdict == DdVerdict::FirstBelow)
      part.possibly_on.push_back(i);
    else
      part.excluded.push_back(i);
  }
  return part;
}

MaxHilbertReport max_hilbert_function(const HilbertPolynomial& p, int n, int jobs) {
  MaxHilbertReport rep;
  rep.census = component_lower_bound(p, n, TermOrder::degrevlex(), jobs);
  const auto& records = rep.census.records;
  const std::size_t count = records.size();

  for (std::size_t i = 0; i < count; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < count && !dominated; ++j) {
      if (j == i) continue;
      dominated = pointwise_leq(records[i].hilbert, records[j].hilbert) &&
                  records[j].hilbert != records[i].hilbert;
    }
    if (!dominated) rep.hf_maximal.push_back(i);
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      DdVerdict verdict = dd_compare(rep.census.order, records[i].slice, records[j].slice);
      if (verdict == DdVerdict::Incomparable) continue;
      ++rep.comparable_pairs;
      std::size_t lo = i, hi = j;
      if (verdict == DdVerdict::SecondBelow) std::swap(lo, hi);
      bool ok = verdict == DdVerdict::Equal
                    ? records[lo].hilbert == records[hi].hilbert
                    : pointwise_leq(records[lo].hilbert, records[hi].hilbert);
      if (!ok) rep.violations.push_back({lo, hi});
    }
  }
  return rep;
}

ConjectureReport conjecture_min_deglex_check(const HilbertPolynomial& p, int n, int jobs) {
  ConjectureReport rep;
  rep.census = component_lower_bound(p, n, TermOrder::deglex(), jobs);
  rep.lex_index = rep.census.lex_index;
  rep.lex_unique_max =
      rep.census.maximal.size() == 1 && rep.census.maximal[0] == rep.lex_index;
  const auto& records = rep.census.records;
  const std::vector<long long>& lex_h = records[rep.lex_index].hilbert;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i == rep.lex_index) continue;
    if (!pointwise_leq(lex_h, records[i].hilbert)) rep.counterexamples.push_back(i);
  }
  rep.consistent = rep.lex_unique_max && rep.counterexamples.empty();
  return rep;
}

namespace {

nlohmann::ordered_json generators_json(const MonomialIdeal& ideal) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Monomial& g : ideal.generators()) arr.push_back(format_monomial(g));
  return arr;
}

nlohmann::ordered_json record_json(const CensusRecord& rec) {
  nlohmann::ordered_json obj;
  obj["generators"] = generators_json(rec.ideal);
  obj["regularity"] = rec.regularity;
  obj["hilbert_function"] = rec.hilbert;
  obj["saturated"] = true;
  obj["x0x1_sat"] = rec.x0x1_sat ? generators_json(*rec.x0x1_sat)
                                 : nlohmann::ordered_json(nullptr);
  return obj;
}

} // namespace

nlohmann::ordered_json census_report_to_json(const CensusReport& report) {
  nlohmann::ordered_json obj;
  obj["p"] = report.p_text;
  obj["n"] = report.n;
  obj["order"] = report.order.text();
  obj["r"] = report.r;
  obj["count"] = report.records.size();
  obj["maximal"] = report.maximal;
  obj["bound_basic"] = report.bound_basic;
  obj["bound_refined"] =
      report.bound_refined ? nlohmann::ordered_json(*report.bound_refined)
                           : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
  for (const CensusRecord& rec : report.records) ideals.push_back(record_json(rec));
  obj["ideals"] = ideals;
  return obj;
}

nlohmann::ordered_json max_hilbert_report_to_json(const MaxHilbertReport& report) {
  nlohmann::ordered_json obj;
  obj["p"] = report.census.p_text;
  obj["n"] = report.census.n;
  obj["order"] = report.census.order.text();
  obj["r"] = report.census.r;
  obj["count"] = report.census.records.size();
  obj["maximal"] = report.census.maximal;
  obj["hf_maximal"] = report.hf_maximal;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (std::size_t idx : report.hf_maximal) {
    const CensusRecord& rec = report.census.records[idx];
    nlohmann::ordered_json entry;
    entry["index"] = idx;
    entry["generators"] = generators_json(rec.ideal);
    entry["hilbert_function"] = rec.hilbert;
    members.push_back(entry);
  }
  obj["members"] = members;
  obj["comparable_pairs"] = report.comparable_pairs;
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const auto& pair : report.violations) viols.push_back({pair[0], pair[1]});
  obj["violations"] = viols;
  return obj;
}

nlohmann::ordered_json conjecture_report_to_json(const ConjectureReport& report) {
  nlohmann::ordered_json obj;
  obj["p"] = report.census.p_text;
  obj["n"] = report.census.n;
  obj["order"] = report.census.order.text();
  obj["r"] = report.census.r;
  obj["count"] = report.census.records.size();
  obj["lex_index"] = report.lex_index;
  obj["lex_unique_max"] = report.lex_unique_max;
  obj["lex_hilbert_function"] = report.census.records[report.lex_index].hilbert;
  obj["counterexamples"] = report.counterexamples;
  obj["consistent"] = report.consistent;
  return obj;
}

} // namespace dgin
