#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgin/census.hpp"
#include "dgin/errors.hpp"
#include "dgin/extorder.hpp"
#include "dgin/hilbert.hpp"
#include "dgin/ideal.hpp"
#include "dgin/report.hpp"
#include "dgin/subspace.hpp"
#include "dgin/term_order.hpp"

namespace py = pybind11;
using namespace dgin;

namespace {

HilbertPolynomial poly(const std::string& text) { return HilbertPolynomial::parse(text); }

TermOrder order_of(const std::string& text, int nvars) { return TermOrder::parse(text, nvars); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with Borel-fixed ideals, extensor orders and "
            "generic initial ideals over the rationals.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ValueError);
  py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<GenericityError>(m, "GenericityError", PyExc_RuntimeError);
  py::register_exception<NotStabilizedError>(m, "NotStabilizedError", PyExc_RuntimeError);

  m.def(
      "gotzmann_number", [](const std::string& p) { return gotzmann_number(poly(p)); },
      py::arg("p"), "Gotzmann number of the Hilbert polynomial given as text, e.g. '7t-5'.");

  m.def(
      "gotzmann_decomposition",
      [](const std::string& p) { return gotzmann_decompose(poly(p)).exponents; }, py::arg("p"),
      "Weakly decreasing binomial exponents of the Macaulay decomposition of p.");

  m.def(
      "lex_ideal",
      [](const std::string& p, int n) { return format_ideal(lex_segment_ideal(poly(p), n)); },
      py::arg("p"), py::arg("n"),
      "Generators of the saturated lex-segment ideal with Hilbert polynomial p in P^n.");

  m.def(
      "segment_ideal",
      [](const std::string& p, int n, const std::string& order) -> std::optional<std::string> {
        std::optional<MonomialIdeal> seg = hilb_segment_ideal(poly(p), n, order_of(order, n + 1));
        if (!seg) return std::nullopt;
        return format_ideal(*seg);
      },
      py::arg("p"), py::arg("n"), py::arg("order") = "degrevlex",
      "Saturated segment ideal under the given order, or None when the top segment "
      "does not realize p.");

  m.def(
      "enumerate_ideals",
      [](const std::string& p, int n) {
        std::vector<std::string> out;
        for (const MonomialIdeal& ideal : enumerate_borel(poly(p), n))
          out.push_back(format_ideal(ideal));
        return out;
      },
      py::arg("p"), py::arg("n"), py::call_guard<py::gil_scoped_release>(),
      "Generator strings of every saturated Borel-fixed ideal with Hilbert polynomial p "
      "in P^n, in canonical order.");

  m.def(
      "census_json",
      [](const std::string& p, int n, const std::string& order, int jobs) {
        return census_report_to_json(component_lower_bound(poly(p), n, order_of(order, n + 1), jobs))
            .dump();
      },
      py::arg("p"), py::arg("n"), py::arg("order") = "degrevlex", py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>(),
      "Census report (ideals, Hilbert functions, maximal slices, component bounds) as a "
      "JSON string.");

  m.def(
      "max_hilbert_json",
      [](const std::string& p, int n, int jobs) {
        return max_hilbert_report_to_json(max_hilbert_function(poly(p), n, jobs)).dump();
      },
      py::arg("p"), py::arg("n"), py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>(),
      "Maximal quotient Hilbert functions across the degrevlex census, as a JSON string.");

  m.def(
      "conjecture_json",
      [](const std::string& p, int n, int jobs) {
        return conjecture_report_to_json(conjecture_min_deglex_check(poly(p), n, jobs)).dump();
      },
      py::arg("p"), py::arg("n"), py::arg("jobs") = 1,
      py::call_guard<py::gil_scoped_release>(),
      "Evidence for the deglex minimality conjecture, as a JSON string.");

  m.def(
      "compare_slices",
      [](const std::string& a, const std::string& b, int nvars, const std::string& order,
         const std::string& method) {
        return dd_verdict_text(dd_compare(order_of(order, nvars), parse_slice(a, nvars),
                                          parse_slice(b, nvars), parse_dd_method(method)));
      },
      py::arg("a"), py::arg("b"), py::arg("nvars"), py::arg("order") = "degrevlex",
      py::arg("method") = "sorted",
      "Partial-order verdict between two bracketed slices: 'equal', 'first_below', "
      "'second_below' or 'incomparable'.");

  m.def(
      "gin",
      [](const std::string& generators, int nvars, int upto, std::uint64_t seed,
         const std::string& order, int trials) {
        MonomialIdeal result = gin_ideal(parse_polynomial_list(generators, nvars),
                                         order_of(order, nvars), seed, upto, trials);
        return std::make_pair(format_ideal(result), result.regularity());
      },
      py::arg("generators"), py::arg("nvars"), py::arg("upto"), py::arg("seed"),
      py::arg("order") = "degrevlex", py::arg("trials") = 2,
      py::call_guard<py::gil_scoped_release>(),
      "Generic initial ideal of the ideal generated by ';'-separated polynomials, "
      "reconstructed up to the given degree.  Returns (generators, regularity).");

  m.def(
      "in_extensor",
      [](const std::string& generators, int nvars, const std::string& order) {
        TermOrder ord = order_of(order, nvars);
        return format_slice(initial_extensor(parse_subspace(generators, nvars), ord), ord);
      },
      py::arg("generators"), py::arg("nvars"), py::arg("order") = "degrevlex",
      "Support of the initial extensor of the spanned subspace, as a bracketed slice.");

  m.def(
      "gin_extensor",
      [](const std::string& generators, int nvars, std::uint64_t seed, const std::string& order,
         int trials) {
        TermOrder ord = order_of(order, nvars);
        return format_slice(
            generic_initial_extensor(parse_subspace(generators, nvars), ord, seed, trials), ord);
      },
      py::arg("generators"), py::arg("nvars"), py::arg("seed"), py::arg("order") = "degrevlex",
      py::arg("trials") = 4,
      "Support of the generic initial extensor of the spanned subspace.");

  m.def(
      "x0x1_saturation",
      [](const std::string& ideal, int nvars) {
        return format_ideal(x0x1_saturation(parse_ideal(ideal, nvars)));
      },
      py::arg("ideal"), py::arg("nvars"),
      "Saturation of a Borel-fixed monomial ideal with respect to x0 and x1.");

  m.def(
      "hilbert_values",
      [](const std::string& ideal, int nvars, long upto) {
        return parse_ideal(ideal, nvars).hilbert_function_range(upto);
      },
      py::arg("ideal"), py::arg("nvars"), py::arg("upto"),
      "Quotient Hilbert function H(0..upto) of a monomial ideal.");

  m.def(
      "regularity",
      [](const std::string& ideal, int nvars) { return parse_ideal(ideal, nvars).regularity(); },
      py::arg("ideal"), py::arg("nvars"),
      "Castelnuovo-Mumford regularity of a Borel-fixed monomial ideal.");
}
