#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuntzlab/block_map.hpp"
#include "cuntzlab/ef_masa.hpp"
#include "cuntzlab/endomorphism.hpp"
#include "cuntzlab/entropy.hpp"
#include "cuntzlab/errors.hpp"
#include "cuntzlab/matrix_embed.hpp"
#include "cuntzlab/oracles.hpp"
#include "cuntzlab/parse.hpp"
#include "cuntzlab/table1.hpp"
#include "cuntzlab/verify.hpp"

namespace py = pybind11;
using namespace cuntzlab;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.get_str());
}

// Real scalars become Fraction, others a (re, im) pair of Fractions.
py::object to_python(const Scalar& s) {
  if (s.is_real()) return fraction(s.re());
  return py::make_tuple(fraction(s.re()), fraction(s.im()));
}

EndomorphismSpec spec_from(const std::string& perm, int n_gens, int rank) {
  if (perm == "shift") return EndomorphismSpec::shift(n_gens);
  return EndomorphismSpec::from_permutation(Permutation::parse(perm, n_gens, rank));
}

}  // namespace

PYBIND11_MODULE(_cuntzlab, m) {
  m.doc() = "Exact computations with polynomial endomorphisms of Cuntz algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<AlgebraElement>(m, "Element")
      .def(py::init([](const std::string& text, int n_gens) { return parse_element(text, n_gens); }),
           py::arg("text"), py::arg("n_gens") = 2)
      .def_property_readonly("n_gens", &AlgebraElement::n_gens)
      .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
      .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
      .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); })
      .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return equals(a, b); })
      .def("adjoint", [](const AlgebraElement& a) { return adjoint(a); })
      .def("is_zero", [](const AlgebraElement& a) { return is_zero(a); })
      .def("canonical", [](const AlgebraElement& a) { return canonicalize(a); })
      .def("trace", [](const AlgebraElement& a) { return to_python(trace_state(a)); })
      .def("expectation", [](const AlgebraElement& a) { return expectation(a); })
      .def("theta", [](const AlgebraElement& a, int power) { return theta_power(a, power); }, py::arg("power") = 1)
      .def("norm", [](const AlgebraElement& a) { return operator_norm(a); })
      .def("__str__", [](const AlgebraElement& a) { return format_element(a); })
      .def("__repr__", [](const AlgebraElement& a) { return "Element('" + format_element(a) + "')"; });

  py::class_<EndomorphismSpec>(m, "Endomorphism")
      .def(py::init(&spec_from), py::arg("perm"), py::arg("n_gens") = 2, py::arg("rank") = 2)
      .def_static("from_unitary", &EndomorphismSpec::from_unitary, py::arg("u"))
      .def_static("identity", &EndomorphismSpec::identity, py::arg("n_gens") = 2)
      .def_property_readonly("n_gens", &EndomorphismSpec::n_gens)
      .def_property_readonly("rank", &EndomorphismSpec::rank)
      .def_property_readonly("label", &EndomorphismSpec::label)
      .def_property_readonly("unitary", &EndomorphismSpec::unitary)
      .def("__call__", [](const EndomorphismSpec& e, const AlgebraElement& a) { return apply(e, a); })
      .def("power", [](const EndomorphismSpec& e, int m, const AlgebraElement& a) { return apply_power(e, m, a); })
      .def("cocycle", [](const EndomorphismSpec& e, int k) { return cocycle(e, k); })
      .def("generator_images", [](const EndomorphismSpec& e) { return generator_images(e); })
      .def("is_gauge_invariant", [](const EndomorphismSpec& e) { return is_gauge_invariant(e); });

  m.def(
      "block_map",
      [](const EndomorphismSpec& e, int p, const std::string& masa) {
        const auto t = masa != "ef" ? block_map(e, p) : e.permutation() ? ef_block_map_fast(e, p) : ef_block_map(e, p);
        py::dict out;
        for (const auto& w : all_words(e.n_gens(), t.window())) out[py::str(w.digits())] = t.image(w).digits();
        return out;
      },
      py::arg("e"), py::arg("p"), py::arg("masa") = "standard",
      "Map from input windows to the first p output letters, as digit strings.");

  m.def(
      "join_counts",
      [](const EndomorphismSpec& e, int p, int n_max, std::uint64_t budget) {
        const int depth = p + (n_max - 1) * (e.rank() - 1);
        return join_counts(standard_masa_map(e, depth), p, n_max, budget);
      },
      py::arg("e"), py::arg("p"), py::arg("n_max"), py::arg("budget") = kDefaultWordBudget);

  m.def(
      "entropy_json",
      [](const EndomorphismSpec& e, const std::string& masa, int p_max, int n_max, std::uint64_t budget) {
        if (masa == "ef") return entropy_estimate(ef_cantor_map(e), e.label(), "EF", p_max, n_max, budget).to_json();
        return entropy_estimate(e, p_max, n_max, budget).to_json();
      },
      py::arg("e"), py::arg("masa") = "standard", py::arg("p_max") = 4, py::arg("n_max") = 16,
      py::arg("budget") = kDefaultWordBudget);

  m.def(
      "oracle_map", [](const std::string& name, const std::string& word) {
        return oracle_map(parse_oracle(name), MultiIndex::from_digits(word)).digits();
      },
      py::arg("name"), py::arg("word"));
  m.def(
      "oracle_equivalence",
      [](const EndomorphismSpec& e, const std::string& name, int depth) {
        return oracle_equivalence(e, parse_oracle(name), depth);
      },
      py::arg("e"), py::arg("name"), py::arg("depth") = 12);

  m.def(
      "lemma1_norms",
      [](const AlgebraElement& x, int k) {
        const auto d = lemma1_decompose(x, k);
        py::dict out;
        for (const auto& [j, part] : d.parts) out[py::str(j.digits())] = spectral_norm(NumericMatrix::from_exact(part));
        return out;
      },
      py::arg("x"), py::arg("k"), "Spectral norms of the T_J, keyed by J.");

  m.def(
      "verify_json",
      [](const std::string& suite, std::uint64_t seed, int depth) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.depth = depth;
        return run_verify_suite(suite, opts).to_json();
      },
      py::arg("suite"), py::arg("seed") = VerifyOptions{}.seed, py::arg("depth") = 0);
  m.def("verify_suites", &verify_suite_names);

  m.def(
      "table1_json",
      [](int p_max, int n_max) {
        Table1Options opts;
        opts.p_max = p_max;
        opts.n_max = n_max;
        std::vector<Table1Row> rows;
        {
          py::gil_scoped_release release;
          rows = run_table1(opts);
        }
        return table1_json(rows);
      },
      py::arg("p_max") = 4, py::arg("n_max") = 16);
}
