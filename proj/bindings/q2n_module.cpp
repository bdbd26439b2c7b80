#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "q2n/json_io.hpp"

namespace py = pybind11;
using namespace q2n;

namespace {

Rational rational_from_object(const py::object& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::int_>(obj)) return Rational::parse(py::str(obj).cast<std::string>());
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  throw py::type_error("expected Rational, int, or 'p/q' string");
}

VectorQ vector_from_object(const py::object& obj) {
  if (py::isinstance<VectorQ>(obj)) return obj.cast<VectorQ>();
  std::vector<Rational> comps;
  for (const auto& item : py::iter(obj)) {
    comps.push_back(rational_from_object(py::reinterpret_borrow<py::object>(item)));
  }
  return VectorQ(std::move(comps));
}

}  // namespace

PYBIND11_MODULE(_q2n, m) {
  m.doc() = "Exact (quasi) 2-norms over rational vectors, seeded axiom "
            "verification, and the Cauchy-sequence completion with rigorous "
            "interval enclosures.";

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& o) { return rational_from_object(o); }))
      .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
      .def_static("pow2", &Rational::pow2)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("abs", &Rational::abs)
      .def("is_zero", &Rational::is_zero);

  py::class_<VectorQ>(m, "VectorQ")
      .def(py::init([](const py::object& o) { return vector_from_object(o); }))
      .def_static("zero", &VectorQ::zero)
      .def_static("basis", &VectorQ::basis)
      .def_property_readonly("dim", &VectorQ::dim)
      .def("__getitem__", [](const VectorQ& v, int i) { return v[i]; })
      .def("__len__", &VectorQ::dim)
      .def("__repr__",
           [](const VectorQ& v) {
             std::string s = "VectorQ([";
             for (int i = 0; i < v.dim(); ++i) s += (i ? ", '" : "'") + v[i].str() + "'";
             return s + "])";
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("scale", [](const VectorQ& v, const py::object& s) { return v * rational_from_object(s); })
      .def("dot", &VectorQ::dot)
      .def("norm_sq", &VectorQ::norm_sq);

  m.def("cross3", &cross3);
  m.def("norm_sq_cross", &norm_sq_cross);

  py::class_<Interval>(m, "Interval")
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def("width", &Interval::width)
      .def("contains", &Interval::contains)
      .def("contains_zero", &Interval::contains_zero)
      .def("overlaps", &Interval::overlaps)
      .def(py::self == py::self)
      .def("__repr__", [](const Interval& iv) {
        return "Interval['" + iv.lo().str() + "', '" + iv.hi().str() + "']";
      });

  m.def("interval_sqrt", &interval_sqrt, py::arg("q"), py::arg("eps"));
  m.def("interval_root", &interval_root, py::arg("q"), py::arg("n"), py::arg("eps"));

  py::class_<TwoNormSpec>(m, "TwoNormSpec")
      .def_static("cross3", &TwoNormSpec::cross3)
      .def_static("cross3p", &TwoNormSpec::cross3p)
      .def_static("scaled", &TwoNormSpec::scaled)
      .def_static("affine", &TwoNormSpec::affine)
      .def_static("mutant", &TwoNormSpec::mutant)
      .def_property_readonly("certified_k", &TwoNormSpec::certified_k)
      .def_property_readonly("conforming", &TwoNormSpec::conforming)
      .def("__eq__", [](const TwoNormSpec& a, const TwoNormSpec& b) { return a == b; })
      .def("__repr__", [](const TwoNormSpec& s) { return "TwoNormSpec(" + s.describe() + ")"; })
      .def("to_json", [](const TwoNormSpec& s) { return spec_to_json(s).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return spec_from_json(Json::parse(text)); });

  m.def("norm_eval", &norm_eval, py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("eps"));
  m.def("norm_sq_exact", &norm_sq_exact);
  m.def("spec_hash", &spec_hash);

  py::class_<SamplerConfig>(m, "SamplerConfig")
      .def(py::init<>())
      .def_readwrite("seed", &SamplerConfig::seed)
      .def_readwrite("trials", &SamplerConfig::trials)
      .def_readwrite("range_lo", &SamplerConfig::range_lo)
      .def_readwrite("range_hi", &SamplerConfig::range_hi)
      .def_readwrite("denominator_bound", &SamplerConfig::denominator_bound);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_property_readonly("all_pass", &AxiomReport::all_pass)
      .def_property_readonly("estimated_k", [](const AxiomReport& r) { return r.estimated_k; })
      .def_property_readonly("certified_k", [](const AxiomReport& r) { return r.certified_k; })
      .def("axiom_status",
           [](const AxiomReport& r, const std::string& axiom) {
             AxiomStatus s;
             if (axiom == "2N1") s = r.n1;
             else if (axiom == "2N2") s = r.n2;
             else if (axiom == "2N3") s = r.n3;
             else if (axiom == "2N4star") s = r.n4star;
             else throw py::value_error("unknown axiom " + axiom);
             return s == AxiomStatus::Pass ? "pass" : "fail";
           })
      .def_property_readonly("witness_count",
                             [](const AxiomReport& r) { return r.witnesses.size(); });

  m.def(
      "verify_axioms",
      [](const TwoNormSpec& spec, const SamplerConfig& cfg, const py::object& claimed_k) {
        std::optional<Rational> k;
        if (!claimed_k.is_none()) k = rational_from_object(claimed_k);
        return verify_axioms(spec, cfg, k);
      },
      py::arg("spec"), py::arg("cfg"), py::arg("claimed_k") = py::none());
  m.def("verify_report_json",
        [](const TwoNormSpec& spec, const SamplerConfig& cfg) {
          return report_to_json(verify_axioms(spec, cfg), spec).dump(2);
        });
  m.def("estimate_k", &estimate_k);
  m.def("probe_uniform_continuity", &probe_uniform_continuity);

  py::class_<SeqSpec>(m, "SeqSpec")
      .def_static("constant", &SeqSpec::constant)
      .def_static("geometric", &SeqSpec::geometric)
      .def_static("newton_sqrt", &SeqSpec::newton_sqrt)
      .def_static("sum", &SeqSpec::sum, py::arg("s"), py::arg("t"),
                  py::arg("quasi_k") = Rational(1))
      .def_static("diff", &SeqSpec::diff, py::arg("s"), py::arg("t"),
                  py::arg("quasi_k") = Rational(1))
      .def_static("scale", &SeqSpec::scale)
      .def("term", &SeqSpec::term)
      .def("modulus", &SeqSpec::modulus)
      .def_property_readonly("dim", &SeqSpec::dim)
      .def_property_readonly("kind", &SeqSpec::kind_name)
      .def("to_json", [](const SeqSpec& s) { return seq_to_json(s).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return seq_from_json(Json::parse(text)); });

  m.def("limit_norm", &limit_norm);

  py::class_<EquivVerdict>(m, "EquivVerdict")
      .def_property_readonly("status", &EquivVerdict::status_name)
      .def_property_readonly("is_equivalent", &EquivVerdict::is_equivalent)
      .def_property_readonly("is_distinct", &EquivVerdict::is_distinct)
      .def("to_json", [](const EquivVerdict& v) { return verdict_to_json(v).dump(); });

  m.def("are_equivalent", &are_equivalent, py::arg("spec"), py::arg("s"), py::arg("t"),
        py::arg("budget") = 30);

  py::class_<CompletionElem>(m, "CompletionElem")
      .def(py::init<TwoNormSpec, SeqSpec>())
      .def_property_readonly("space", &CompletionElem::space)
      .def_property_readonly("rep", &CompletionElem::rep)
      .def("to_json", [](const CompletionElem& e) { return elem_to_json(e).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return elem_from_json(Json::parse(text)); });

  m.def("embed",
        [](const TwoNormSpec& space, const VectorQ& x) { return embed(space, x).elem; });
  m.def("completion_add", &completion_add);
  m.def("completion_scale", &completion_scale);
  m.def("completion_norm", &completion_norm);
  m.def("completion_equal", &completion_equal, py::arg("a"), py::arg("b"),
        py::arg("budget") = 30);
  m.def("approximate_by_x0", &approximate_by_x0);
  m.def("complete_limit", &complete_limit, py::arg("space"), py::arg("family"),
        py::arg("family_modulus"));

  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InconclusiveSampling>(m, "InconclusiveSamplingError", PyExc_RuntimeError);
  py::register_exception<InvalidCertificate>(m, "InvalidCertificateError", PyExc_ValueError);
}
