#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qfock/cli.hpp"
#include "qfock/serialize.hpp"

namespace py = pybind11;
using namespace qfock;

namespace {

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

std::string decompose_json(int n, int M, int degree, bool intertwining) {
  DecompOptions opt;
  opt.intertwining = intertwining;
  return to_json(psi_k_check(n, M, degree, opt)).dump();
}

std::string character_identity_json(int n, int k, int cutoff) {
  CharIdentityReport r = character_identity_check(n, k, cutoff);
  Json j{{"match", r.match}, {"offset", r.offset}, {"fock", to_json(r.lhs)}, {"strips", to_json(r.rhs)}};
  j["badGrade"] = r.bad_grade ? Json(*r.bad_grade) : Json(nullptr);
  return j.dump();
}

std::string macdonald_json(const std::vector<int>& lambda, const std::vector<int>& sigma, bool p1) {
  CompositionLabel l = sigma.empty() ? CompositionLabel::min(lambda) : CompositionLabel::make(lambda, sigma);
  return Json{{"lambda", l.lambda}, {"sigma", l.sigma}, {"polynomial", to_json(cached_macdonald(l, p1))}}.dump();
}

std::string straighten_json(const std::vector<int>& word, int n) { return to_json(straighten(word, n)).dump(); }

std::string strip_module_json(const std::vector<int>& strip, int n, int a0) {
  Subspace im = image_basis(strip_product(strip, a0, StripVariant::R, n));
  return Json{{"dim", im.dim()},
              {"sstCount", enumerate_sst(strip_to_skew(strip), n).size()},
              {"character", to_json(subspace_character(im, n, strip_size(strip)))},
              {"skewSchur", to_json(skew_schur(strip_to_skew(strip), n))}}
      .dump();
}

std::string level1_character_json(int n, int k, int cutoff) { return to_json(char_level1(n, k, cutoff)).dump(); }

std::vector<std::pair<int, int>> sl2_factors(const std::vector<int>& strip) {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : sl2_factorize(strip)) out.emplace_back(f.n, f.b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qfock, m) {
  m.doc() = "Exact computations on the q-deformed Fock space";

  py::register_exception<NotSl2Strip>(m, "NotSl2Strip", PyExc_ValueError);

  py::class_<RingElem>(m, "RingElem")
      .def(py::init([](long n) { return RingElem(n); }))
      .def(py::init([](const std::string& s) { return parse_ring_elem(s); }))
      .def_static("q", &RingElem::q)
      .def_static("p", &RingElem::p)
      .def("inv", &RingElem::inv)
      .def("pow", &RingElem::pow)
      .def("is_zero", &RingElem::is_zero)
      .def("at_p1", [](const RingElem& a) { return specialize_p1(a); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__pow__", &RingElem::pow)
      .def("__str__", &RingElem::to_string)
      .def("__repr__", [](const RingElem& a) { return "RingElem('" + a.to_string() + "')"; });

  m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit code, stdout, stderr).");
  m.def("decompose_json", &decompose_json, py::arg("n"), py::arg("M"), py::arg("degree"),
        py::arg("intertwining") = true);
  m.def("character_identity_json", &character_identity_json, py::arg("n"), py::arg("k"), py::arg("cutoff"));
  m.def("macdonald_json", &macdonald_json, py::arg("lambda_"), py::arg("sigma") = std::vector<int>{},
        py::arg("p1") = false);
  m.def("straighten_json", &straighten_json, py::arg("word"), py::arg("n"));
  m.def("strip_module_json", &strip_module_json, py::arg("strip"), py::arg("n"), py::arg("a0") = 0);
  m.def("level1_character_json", &level1_character_json, py::arg("n"), py::arg("k"), py::arg("cutoff"));
  m.def("sl2_factorize", &sl2_factors, py::arg("strip"));
}
