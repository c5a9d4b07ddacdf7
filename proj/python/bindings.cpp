#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "metafib/construction.hpp"
#include "metafib/serialization.hpp"
#include "metafib/verify.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpz_class <-> Python int, through decimal strings. Sequence values are
// unbounded, so Python's arbitrary-precision int is the natural surface type.
template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (PyLong_Check(src.ptr()) == 0) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (text == nullptr) {
      PyErr_Clear();
      return false;
    }
    const char* digits = PyUnicode_AsUTF8(text);
    bool ok = digits != nullptr;
    if (ok) {
      try {
        value = mpz_class(digits, 10);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
    } else {
      PyErr_Clear();
    }
    Py_DECREF(text);
    return ok;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

std::string dump_json(const metafib::json& j) { return j.dump(2); }

metafib::json parse_json_text(const std::string& text, const char* what) {
  try {
    return metafib::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(what) + " is not valid JSON: " + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_metafib, m) {
  using namespace metafib;

  m.doc() = "Meta-Fibonacci recurrence evaluation and linear recurrent subsequence embedding";

  py::register_exception<search_limit_error>(m, "SearchLimitError", PyExc_RuntimeError);
  py::register_exception<oracle_budget_exceeded>(m, "OracleBudgetError", PyExc_RuntimeError);

  py::class_<LinearRecurrence>(m, "LinearRecurrence")
      .def(py::init<std::vector<Int>, std::vector<Int>>(), py::arg("coeffs"), py::arg("initial"))
      .def_property_readonly("k", &LinearRecurrence::k)
      .def_property_readonly("coeffs", &LinearRecurrence::coeffs)
      .def_property_readonly("initial", &LinearRecurrence::initial)
      .def("prefix",
           [](const LinearRecurrence& rec, Index n_terms) { return prefix(rec, n_terms); },
           py::arg("n_terms"))
      .def("rotation", [](const LinearRecurrence& rec, Index r) { return rotate(rec, r); },
           py::arg("r"))
      .def("__repr__", [](const LinearRecurrence& rec) {
        return "LinearRecurrence(k=" + std::to_string(rec.k()) + ")";
      });

  py::class_<RotatedRecurrence>(m, "RotatedRecurrence")
      .def(py::init<LinearRecurrence, Index>(), py::arg("base"), py::arg("r"))
      .def_property_readonly("k", &RotatedRecurrence::k)
      .def_property_readonly("r", &RotatedRecurrence::r)
      .def_property_readonly("base", &RotatedRecurrence::base)
      .def_property_readonly("coeffs_by_lag", &RotatedRecurrence::coeffs_by_lag)
      .def_property_readonly("effective_lags", &RotatedRecurrence::effective_lags)
      .def("coeff_at_lag", &RotatedRecurrence::coeff_at_lag, py::arg("lag"))
      .def("lag_of_coeff", &RotatedRecurrence::lag_of_coeff, py::arg("i"))
      .def("prefix",
           [](const RotatedRecurrence& rec, Index n_terms) { return prefix(rec, n_terms); },
           py::arg("n_terms"));

  py::class_<GrowthCertificate>(m, "GrowthCertificate")
      .def_readonly("m0", &GrowthCertificate::m0)
      .def_readonly("n_star", &GrowthCertificate::n_star)
      .def_readonly("window_min", &GrowthCertificate::window_min);

  py::class_<GrowthViolation>(m, "GrowthViolation")
      .def_readonly("m", &GrowthViolation::m)
      .def_readonly("term", &GrowthViolation::term)
      .def_readonly("bound", &GrowthViolation::bound);

  py::class_<GrowthResult>(m, "GrowthResult")
      .def_readonly("certificate", &GrowthResult::certificate)
      .def_readonly("violation", &GrowthResult::violation)
      .def("ok", &GrowthResult::ok);

  m.def("growth_certificate", &growth_certificate, py::arg("rec"), py::arg("m0"),
        py::arg("scan_limit") = kDefaultScanLimit);
  m.def("minimal_certified_m0", &minimal_certified_m0, py::arg("rec"),
        py::arg("scan_limit") = kDefaultScanLimit);

  py::class_<MetaFibRecurrence>(m, "MetaFibRecurrence")
      .def(py::init<Index, std::vector<Int>>(), py::arg("n0"), py::arg("coeffs"))
      .def_property_readonly("n0", &MetaFibRecurrence::n0)
      .def_property_readonly("max_offset", &MetaFibRecurrence::max_offset)
      .def_property_readonly("coeffs", &MetaFibRecurrence::coeffs);

  py::class_<InitialCondition>(m, "InitialCondition")
      .def(py::init<Index, std::vector<Int>>(), py::arg("start"), py::arg("values"))
      .def_property_readonly("start", &InitialCondition::start)
      .def_property_readonly("values", &InitialCondition::values);

  py::class_<Death>(m, "Death")
      .def_readonly("n", &Death::n)
      .def_readonly("offset", &Death::offset)
      .def_readonly("inner_value", &Death::inner_value)
      .def_readonly("argument", &Death::argument)
      .def("__repr__", [](const Death& d) {
        return "Death(n=" + std::to_string(d.n) + ", offset=" + std::to_string(d.offset) +
               ", inner_value=" + d.inner_value.get_str() + ", argument=" + d.argument.get_str() +
               ")";
      });

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("values", &EvalResult::values)
      .def_readonly("death", &EvalResult::death)
      .def("died", &EvalResult::died);

  m.def("eval_prefix", &eval_prefix, py::arg("rec"), py::arg("init"), py::arg("n_terms"));
  m.def("eval_oracle",
        [](const MetaFibRecurrence& rec, const InitialCondition& init, Index n_terms,
           Index max_depth) { return eval_oracle(rec, init, n_terms, OracleLimits{max_depth}); },
        py::arg("rec"), py::arg("init"), py::arg("n_terms"), py::arg("max_depth") = 10'000);
  m.def("extract_subsequence",
        [](const std::vector<Int>& seq, Index stride, Index offset) {
          return extract_subsequence(seq, stride, offset);
        },
        py::arg("seq"), py::arg("stride"), py::arg("offset") = 0);

  py::class_<Slot>(m, "Slot")
      .def_readonly("m", &Slot::m)
      .def_readonly("j", &Slot::j)
      .def_readonly("odd", &Slot::odd);

  m.def("q_slot", &q_slot, py::arg("n"), py::arg("k"));

  py::class_<Construction>(m, "Construction")
      .def_readonly("input", &Construction::input)
      .def_readonly("s", &Construction::s)
      .def_readonly("h", &Construction::h)
      .def_readonly("target", &Construction::target)
      .def_readonly("initial", &Construction::initial)
      .def_readonly("certificates", &Construction::certificates)
      .def("interleaved_term",
           [](const Construction& c, Index n) { return interleaved_term(c, n); }, py::arg("n"))
      .def("interleaved_prefix",
           [](const Construction& c, Index n_terms) { return interleaved_prefix(c, n_terms); },
           py::arg("n_terms"))
      .def("to_json", [](const Construction& c) { return dump_json(to_json(c)); });

  m.def("build_meta_recurrence", &build_meta_recurrence, py::arg("rec"));

  py::class_<HValidity>(m, "HValidity")
      .def_readonly("ok", &HValidity::ok)
      .def_readonly("diagnostic", &HValidity::diagnostic)
      .def_readonly("certificates", &HValidity::certificates);

  m.def("is_valid_h", [](const LinearRecurrence& rec, Index h) { return is_valid_h(rec, h); },
        py::arg("rec"), py::arg("h"));
  m.def("find_h", &find_h, py::arg("rec"));
  m.def("build", py::overload_cast<const LinearRecurrence&>(&build), py::arg("rec"));
  m.def("build", py::overload_cast<const LinearRecurrence&, Index>(&build), py::arg("rec"),
        py::arg("h"));
  m.def("construction_from_json", [](const std::string& text) {
    return construction_from_json(parse_json_text(text, "bundle"));
  });

  py::class_<Mismatch>(m, "Mismatch")
      .def_readonly("n", &Mismatch::n)
      .def_readonly("slot", &Mismatch::slot)
      .def_readonly("expected", &Mismatch::expected)
      .def_readonly("got", &Mismatch::got);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("passed", &TheoremReport::pass)
      .def_readonly("checked", &TheoremReport::checked)
      .def_readonly("first_mismatch", &TheoremReport::first_mismatch)
      .def_readonly("death", &TheoremReport::death);

  py::enum_<SlotClass>(m, "SlotClass")
      .value("VANISHES_NEGATIVE", SlotClass::VanishesNegative)
      .value("LANDS_ODD_SLOT", SlotClass::LandsOddSlot)
      .value("LANDS_EVEN_SLOT", SlotClass::LandsEvenSlot);

  py::class_<TraceTerm>(m, "TraceTerm")
      .def_readonly("offset", &TraceTerm::offset)
      .def_readonly("coeff", &TraceTerm::coeff)
      .def_readonly("inner_value", &TraceTerm::inner_value)
      .def_readonly("argument", &TraceTerm::argument)
      .def_readonly("slot_class", &TraceTerm::cls)
      .def_readonly("contribution", &TraceTerm::contribution)
      .def_readonly("landed", &TraceTerm::landed);

  py::class_<CaseTrace>(m, "CaseTrace")
      .def_readonly("n", &CaseTrace::n)
      .def_readonly("slot", &CaseTrace::slot)
      .def_readonly("terms", &CaseTrace::terms)
      .def_readonly("value", &CaseTrace::value)
      .def_readonly("pattern_ok", &CaseTrace::pattern_ok)
      .def_readonly("violation", &CaseTrace::violation)
      .def_readonly("death", &CaseTrace::death);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("from_", &SweepReport::from)
      .def_readonly("to", &SweepReport::to)
      .def_readonly("traced", &SweepReport::traced)
      .def_readonly("violations", &SweepReport::violations)
      .def_readonly("first_violation", &SweepReport::first_violation);

  py::class_<TheoremVerifier>(m, "TheoremVerifier")
      .def(py::init<Construction>(), py::arg("construction"))
      .def("check_theorem", &TheoremVerifier::check_theorem, py::arg("n_terms"))
      .def("check_subsequence", &TheoremVerifier::check_subsequence, py::arg("n_count"))
      .def("trace_case", &TheoremVerifier::trace_case, py::arg("n"))
      .def("sweep_cases", &TheoremVerifier::sweep_cases, py::arg("from_"), py::arg("to"));

  m.def("check_theorem",
        [](const Construction& c, Index n_terms) { return check_theorem(c, n_terms); },
        py::arg("construction"), py::arg("n_terms"));
  m.def("check_subsequence",
        [](const Construction& c, Index n_count) { return check_subsequence(c, n_count); },
        py::arg("construction"), py::arg("n_count"));
  m.def("trace_case", [](const Construction& c, Index n) { return trace_case(c, n); },
        py::arg("construction"), py::arg("n"));
  m.def("sweep_cases",
        [](const Construction& c, Index from, Index to) { return sweep_cases(c, from, to); },
        py::arg("construction"), py::arg("from_"), py::arg("to"));
}
