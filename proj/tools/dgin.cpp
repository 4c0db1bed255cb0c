#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgin/census.hpp"
#include "dgin/errors.hpp"
#include "dgin/extorder.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"
#include "dgin/report.hpp"
#include "dgin/subspace.hpp"
#include "dgin/term_order.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string poly;
  std::string order_text = "degrevlex";
  std::string method_text = "sorted";
  std::string format = "text";
  std::string output_path;
  std::string slice_a, slice_b, polys, subspace, candidate;
  int n = -1;
  long upto = 0;
  long budget = 100000;
  unsigned long long seed = 0;
  int gin_trials = 2;
  int ginext_trials = 4;
  int jobs = 1;
  bool max_hilbert = false;
};

int default_jobs() {
  const char* env = std::getenv("DGIN_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1 || value > 4096)
    throw dgin::ParseError("DGIN_JOBS must be a positive thread count");
  return static_cast<int>(value);
}

std::string indices_line(const ordered_json& arr) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out << ' ';
    out << v.get<std::size_t>();
    first = false;
  }
  return out.str();
}

std::string generators_line(const ordered_json& arr) {
  std::ostringstream out;
  bool first = true;
  for (const auto& g : arr) {
    if (!first) out << ", ";
    out << g.get<std::string>();
    first = false;
  }
  return out.str();
}

std::string bound_line(const ordered_json& j) {
  std::ostringstream out;
  out << "bound_basic=" << j.at("bound_basic").get<int>() << " bound_refined=";
  if (j.at("bound_refined").is_null())
    out << "unset";
  else
    out << j.at("bound_refined").get<int>();
  return out.str();
}

std::string census_header(const ordered_json& j) {
  std::ostringstream out;
  out << "p=" << j.at("p").get<std::string>() << " n=" << j.at("n").get<int>();
  if (j.contains("order")) out << " order=" << j.at("order").get<std::string>();
  out << " r=" << j.at("r").get<long>() << " count=" << j.at("count").get<std::size_t>();
  return out.str();
}

// Every renderer reads from the JSON object, so the two formats cannot
// drift apart.
std::string render_enumerate(const ordered_json& j) {
  std::ostringstream out;
  out << census_header(j) << '\n';
  const auto& ideals = j.at("ideals");
  for (std::size_t i = 0; i < ideals.size(); ++i)
    out << i << ": " << generators_line(ideals[i].at("generators")) << '\n';
  return out.str();
}

std::string render_maximal(const ordered_json& j) {
  std::ostringstream out;
  out << census_header(j) << " maximal=" << j.at("maximal").size() << '\n';
  for (const auto& member : j.at("members"))
    out << member.at("index").get<std::size_t>() << ": "
        << generators_line(member.at("generators")) << '\n';
  return out.str();
}

std::string render_report(const ordered_json& j) {
  std::ostringstream out;
  out << census_header(j) << '\n';
  out << "maximal: " << indices_line(j.at("maximal")) << '\n';
  out << bound_line(j) << '\n';
  if (j.contains("filter")) {
    out << "possibly_on: " << indices_line(j.at("filter").at("possibly_on")) << '\n';
    out << "excluded: " << indices_line(j.at("filter").at("excluded")) << '\n';
  }
  return out.str();
}

std::string render_max_hilbert(const ordered_json& j) {
  std::ostringstream out;
  out << census_header(j) << '\n';
  out << "maximal: " << indices_line(j.at("maximal")) << '\n';
  out << "hf_maximal: " << indices_line(j.at("hf_maximal")) << '\n';
  out << "comparable_pairs=" << j.at("comparable_pairs").get<long long>()
      << " violations=" << j.at("violations").size() << '\n';
  return out.str();
}

std::string render_conjecture(const ordered_json& j) {
  std::ostringstream out;
  out << "verdict=" << (j.at("consistent").get<bool>() ? "consistent" : "inconsistent")
      << " lex_index=" << j.at("lex_index").get<std::size_t>()
      << " lex_unique_max=" << (j.at("lex_unique_max").get<bool>() ? "true" : "false")
      << " counterexamples=" << indices_line(j.at("counterexamples")).insert(0, "[").append("]")
      << '\n';
  return out.str();
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
  std::string payload = opt.format == "json" ? j.dump(2) + "\n" : text;
  if (opt.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) throw dgin::ResourceError("cannot open output path " + opt.output_path);
  file << payload;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  try {
    opt.jobs = default_jobs();
  } catch (const dgin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Borel-fixed ideal censuses, the double-prec order and"
               " generic initial ideals over the rationals"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", opt.output_path, "Write results to a file instead of stdout");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opt.jobs, "Worker threads for per-ideal post-processing")
        ->check(CLI::Range(1, 4096));
  };

  CLI::App* gotzmann = app.add_subcommand("gotzmann", "Gotzmann number of a Hilbert polynomial");
  gotzmann->add_option("--poly", opt.poly, "Hilbert polynomial, e.g. \"7t-5\"")->required();
  add_format(gotzmann);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "All saturated Borel-fixed ideals with a given Hilbert polynomial");
  enumerate->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  enumerate->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  add_jobs(enumerate);
  add_format(enumerate);

  CLI::App* maximal = app.add_subcommand(
      "maximal", "Maximal census slices under the double-prec order");
  maximal->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  maximal->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  maximal->add_option("--order", opt.order_text, "Term order");
  add_jobs(maximal);
  add_format(maximal);

  CLI::App* bound = app.add_subcommand(
      "bound", "Lower bounds on the number of irreducible Hilbert scheme components");
  bound->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  bound->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  bound->add_option("--order", opt.order_text, "Term order");
  add_jobs(bound);
  add_format(bound);

  CLI::App* compare = app.add_subcommand(
      "compare", "Compare two extensor terms under the double-prec order");
  compare->add_option("slice_a", opt.slice_a, "First slice, e.g. \"[x2^2, x1*x2]\"")->required();
  compare->add_option("slice_b", opt.slice_b, "Second slice")->required();
  compare->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  compare->add_option("--order", opt.order_text, "Term order");
  compare->add_option("--method", opt.method_text, "Comparison method")
      ->check(CLI::IsMember({"sorted", "counting", "symmdiff", "matching"}));
  add_format(compare);

  CLI::App* gin = app.add_subcommand(
      "gin", "Generic initial ideal of an ideal given by homogeneous generators");
  gin->add_option("polys", opt.polys, "Semicolon-separated generators")->required();
  gin->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  gin->add_option("--order", opt.order_text, "Term order");
  CLI::Option* gin_seed = gin->add_option("--seed", opt.seed, "Random seed");
  gin->add_option("--upto", opt.upto, "Reconstruct graded pieces up to this degree")
      ->required()->check(CLI::Range(0L, 1000000L));
  gin->add_option("--trials", opt.gin_trials, "Independent draws per round")
      ->check(CLI::Range(1, 1000));
  add_format(gin);

  CLI::App* ginext = app.add_subcommand(
      "ginext", "Generic initial extensor of a subspace of a graded piece");
  ginext->add_option("subspace", opt.subspace, "Semicolon-separated basis polynomials")
      ->required();
  ginext->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  ginext->add_option("--order", opt.order_text, "Term order");
  CLI::Option* ginext_seed = ginext->add_option("--seed", opt.seed, "Random seed");
  ginext->add_option("--trials", opt.ginext_trials, "Independent draws per round")
      ->check(CLI::Range(1, 1000));
  add_format(ginext);

  CLI::App* support = app.add_subcommand(
      "support", "All extensor terms with nonzero Pluecker coordinate at a subspace");
  support->add_option("subspace", opt.subspace, "Semicolon-separated basis polynomials")
      ->required();
  support->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  support->add_option("--order", opt.order_text, "Term order");
  support->add_option("--budget", opt.budget, "Cap on candidate subsets examined")
      ->check(CLI::Range(1L, 1000000000L));
  add_format(support);

  CLI::App* hilb = app.add_subcommand(
      "hilb", "Segment ideal spanned by the top monomials under a term order");
  hilb->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  hilb->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  hilb->add_option("--order", opt.order_text, "Term order");
  add_format(hilb);

  CLI::App* report = app.add_subcommand(
      "report", "Full census report: slices, maximal terms, component bounds");
  report->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  report->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  report->add_option("--order", opt.order_text, "Term order");
  CLI::Option* cand_opt = report->add_option(
      "--candidate", opt.candidate, "Census slice to filter the census against");
  report->add_flag("--max-hilbert", opt.max_hilbert,
                   "Report members of maximal Hilbert function (degrevlex only)")
      ->excludes(cand_opt);
  add_jobs(report);
  add_format(report);

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "Evidence for the deglex minimal Hilbert function conjecture");
  conjecture->add_option("--n", opt.n, "Projective ambient dimension")->required()
      ->check(CLI::Range(1, 62));
  conjecture->add_option("--poly", opt.poly, "Hilbert polynomial")->required();
  add_jobs(conjecture);
  add_format(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (opt.format == "json" && gin->parsed() && gin_seed->count() == 0) {
    std::cerr << "error: --seed is required for gin with --format json\n";
    return 2;
  }
  if (opt.format == "json" && ginext->parsed() && ginext_seed->count() == 0) {
    std::cerr << "error: --seed is required for ginext with --format json\n";
    return 2;
  }

  try {
    const int nvars = opt.n + 1;

    if (gotzmann->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::GotzmannDecomposition decomposition = dgin::gotzmann_decompose(p);
      ordered_json j;
      j["p"] = p.text();
      j["r"] = decomposition.number();
      j["decomposition"] = decomposition.exponents;
      emit(opt, j, std::to_string(decomposition.number()) + "\n");
    } else if (enumerate->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::CensusReport rep =
          dgin::component_lower_bound(p, opt.n, dgin::TermOrder::degrevlex(), opt.jobs);
      ordered_json j = dgin::census_report_to_json(rep);
      j.erase("order");
      j.erase("maximal");
      j.erase("bound_basic");
      j.erase("bound_refined");
      emit(opt, j, render_enumerate(j));
    } else if (maximal->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      dgin::CensusReport rep = dgin::component_lower_bound(p, opt.n, order, opt.jobs);
      ordered_json j;
      j["p"] = rep.p_text;
      j["n"] = rep.n;
      j["order"] = rep.order.text();
      j["r"] = rep.r;
      j["count"] = rep.records.size();
      j["maximal"] = rep.maximal;
      ordered_json members = ordered_json::array();
      for (std::size_t idx : rep.maximal) {
        const dgin::CensusRecord& rec = rep.records[idx];
        ordered_json entry;
        entry["index"] = idx;
        ordered_json gens = ordered_json::array();
        for (const dgin::Monomial& g : rec.ideal.generators())
          gens.push_back(dgin::format_monomial(g));
        entry["generators"] = gens;
        if (rec.x0x1_sat) {
          ordered_json sat = ordered_json::array();
          for (const dgin::Monomial& g : rec.x0x1_sat->generators())
            sat.push_back(dgin::format_monomial(g));
          entry["x0x1_sat"] = sat;
        } else {
          entry["x0x1_sat"] = nullptr;
        }
        members.push_back(entry);
      }
      j["members"] = members;
      emit(opt, j, render_maximal(j));
    } else if (bound->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      dgin::CensusReport rep = dgin::component_lower_bound(p, opt.n, order, opt.jobs);
      ordered_json j;
      j["p"] = rep.p_text;
      j["n"] = rep.n;
      j["order"] = rep.order.text();
      j["bound_basic"] = rep.bound_basic;
      j["bound_refined"] = rep.bound_refined ? ordered_json(*rep.bound_refined)
                                             : ordered_json(nullptr);
      emit(opt, j, bound_line(j) + "\n");
    } else if (compare->parsed()) {
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      dgin::DegreeSlice a = dgin::parse_slice(opt.slice_a, nvars);
      dgin::DegreeSlice b = dgin::parse_slice(opt.slice_b, nvars);
      dgin::DdMethod method = dgin::parse_dd_method(opt.method_text);
      dgin::DdVerdict verdict = dgin::dd_compare(order, a, b, method);
      ordered_json j;
      j["order"] = order.text();
      j["method"] = dgin::dd_method_text(method);
      j["a"] = dgin::format_slice(a, order);
      j["b"] = dgin::format_slice(b, order);
      j["verdict"] = dgin::dd_verdict_text(verdict);
      emit(opt, j, dgin::dd_verdict_text(verdict) + "\n");
    } else if (gin->parsed()) {
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      std::vector<dgin::HomogeneousPolynomial> gens =
          dgin::parse_polynomial_list(opt.polys, nvars);
      dgin::MonomialIdeal result =
          dgin::gin_ideal(gens, order, opt.seed, static_cast<int>(opt.upto), opt.gin_trials);
      ordered_json j;
      j["order"] = order.text();
      j["seed"] = opt.seed;
      j["upto"] = opt.upto;
      j["trials"] = opt.gin_trials;
      ordered_json arr = ordered_json::array();
      for (const dgin::Monomial& g : result.generators())
        arr.push_back(dgin::format_monomial(g));
      j["generators"] = arr;
      j["regularity"] = result.regularity();
      emit(opt, j, dgin::format_ideal(result) + "\n");
    } else if (ginext->parsed()) {
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      dgin::Subspace v = dgin::parse_subspace(opt.subspace, nvars);
      dgin::DegreeSlice slice =
          dgin::generic_initial_extensor(v, order, opt.seed, opt.ginext_trials);
      ordered_json j;
      j["order"] = order.text();
      j["seed"] = opt.seed;
      j["trials"] = opt.ginext_trials;
      j["slice"] = dgin::format_slice(slice, order);
      emit(opt, j, dgin::format_slice(slice, order) + "\n");
    } else if (support->parsed()) {
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      dgin::Subspace v = dgin::parse_subspace(opt.subspace, nvars);
      std::vector<dgin::DegreeSlice> terms = dgin::delta_support(v, order, opt.budget);
      ordered_json j;
      j["order"] = order.text();
      j["degree"] = v.degree();
      j["size"] = v.dim();
      j["count"] = terms.size();
      ordered_json arr = ordered_json::array();
      for (const dgin::DegreeSlice& s : terms) arr.push_back(dgin::format_slice(s, order));
      j["support"] = arr;
      std::ostringstream text;
      for (const auto& s : j["support"]) text << s.get<std::string>() << '\n';
      emit(opt, j, text.str());
    } else if (hilb->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      std::optional<dgin::MonomialIdeal> segment = dgin::hilb_segment_ideal(p, opt.n, order);
      ordered_json j;
      j["p"] = p.text();
      j["n"] = opt.n;
      j["order"] = order.text();
      if (segment) {
        ordered_json entry;
        ordered_json arr = ordered_json::array();
        for (const dgin::Monomial& g : segment->generators())
          arr.push_back(dgin::format_monomial(g));
        entry["generators"] = arr;
        entry["regularity"] = segment->regularity();
        j["segment"] = entry;
      } else {
        j["segment"] = nullptr;
      }
      emit(opt, j, (segment ? dgin::format_ideal(*segment) : std::string("none")) + "\n");
    } else if (report->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::TermOrder order = dgin::TermOrder::parse(opt.order_text, nvars);
      if (opt.max_hilbert) {
        if (order.text() != "degrevlex")
          throw dgin::UnsupportedInputError(
              "the maximal Hilbert function report requires the degrevlex order");
        dgin::MaxHilbertReport rep = dgin::max_hilbert_function(p, opt.n, opt.jobs);
        ordered_json j = dgin::max_hilbert_report_to_json(rep);
        emit(opt, j, render_max_hilbert(j));
      } else {
        dgin::CensusReport rep = dgin::component_lower_bound(p, opt.n, order, opt.jobs);
        ordered_json j = dgin::census_report_to_json(rep);
        if (cand_opt->count() > 0) {
          dgin::DegreeSlice g = dgin::parse_slice(opt.candidate, nvars);
          std::vector<dgin::DegreeSlice> slices;
          slices.reserve(rep.records.size());
          for (const auto& rec : rep.records) slices.push_back(rec.slice);
          dgin::FilterPartition part = dgin::necessary_condition_filter(slices, g, order);
          ordered_json filter;
          filter["candidate"] = dgin::format_slice(g, order);
          ordered_json verdicts = ordered_json::array();
          for (dgin::DdVerdict v : part.verdicts) verdicts.push_back(dgin::dd_verdict_text(v));
          filter["verdicts"] = verdicts;
          filter["possibly_on"] = part.possibly_on;
          filter["excluded"] = part.excluded;
          j["filter"] = filter;
        }
        emit(opt, j, render_report(j));
      }
    } else if (conjecture->parsed()) {
      dgin::HilbertPolynomial p = dgin::HilbertPolynomial::parse(opt.poly);
      dgin::ConjectureReport rep = dgin::conjecture_min_deglex_check(p, opt.n, opt.jobs);
      ordered_json j = dgin::conjecture_report_to_json(rep);
      emit(opt, j, render_conjecture(j));
    }
  } catch (const dgin::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dgin::GenericityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const dgin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
