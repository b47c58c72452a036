#include "pxmod/io.hpp"
#include "pxmod/peiffer.hpp"
#include "pxmod/theorems.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

namespace py = pybind11;
using namespace pxmod;

namespace {

/// A loaded pre-crossed module of either kind, the unit of work for the
/// python surface. JSON strings are used for all structured payloads so that
/// results match the file formats bit for bit.
struct PyPcm {
  LoadedPcm p;

  bool is_group() const { return static_cast<bool>(p.group); }
  std::string kind() const { return is_group() ? "group" : "algebra"; }
  std::string name() const { return is_group() ? (*p.group)->name : (*p.algebra)->name; }
  std::size_t size() const {
    return is_group() ? (*p.group)->x->order : (*p.algebra)->x->dim;
  }
  std::string dumps() const {
    return (is_group() ? pcm_to_json(**p.group) : pcm_to_json(**p.algebra)).dump(2) + "\n";
  }
  py::tuple crossed() const {
    CrossedCheck c = is_group() ? is_crossed(**p.group) : is_crossed(**p.algebra);
    return py::make_tuple(c.crossed, c.witness);
  }
};

PyPcm load(const std::string& path) { return {load_pcm(path)}; }

PyPcm loads(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return {pcm_from_json(j, std::filesystem::current_path())};
}

std::string commutator(const PyPcm& a, const std::vector<int>& xgens,
                       const std::vector<int>& ygens) {
  if (a.is_group()) {
    const GroupPcmRef& p = *a.p.group;
    GroupSubPcm x = xgens.empty() ? whole_sub_pcm(p)
                                  : sub_pcm_generate(p, EltSet(xgens.begin(), xgens.end()));
    GroupSubPcm y = ygens.empty() ? whole_sub_pcm(p)
                                  : sub_pcm_generate(p, EltSet(ygens.begin(), ygens.end()));
    return subobject_to_json(peiffer_commutator(x, y)).dump();
  }
  const AlgebraPcmRef& p = *a.p.algebra;
  Mat xg, yg;
  for (int i : xgens) xg.push_back(p->x->basis_vec(static_cast<std::size_t>(i)));
  for (int i : ygens) yg.push_back(p->x->basis_vec(static_cast<std::size_t>(i)));
  AlgebraSubPcm x = xgens.empty() ? whole_sub_pcm(p) : sub_pcm_generate(p, xg);
  AlgebraSubPcm y = ygens.empty() ? whole_sub_pcm(p) : sub_pcm_generate(p, yg);
  return subobject_to_json(peiffer_commutator(x, y)).dump();
}

py::dict product_impl(const PyPcm& a, const PyPcm& b, bool as_coproduct) {
  if (a.is_group() != b.is_group())
    throw ValidationError("the two inputs are of different kinds");
  py::dict out;
  if (a.is_group()) {
    GroupPeifferProduct p = as_coproduct ? coproduct_xmod(*a.p.group, *b.p.group)
                                         : peiffer_product(*a.p.group, *b.p.group);
    out["pcm"] = PyPcm{LoadedPcm{p.pcm, std::nullopt}};
    out["lx"] = morphism_to_json(p.lx).dump();
    out["ly"] = morphism_to_json(p.ly).dump();
  } else {
    AlgebraPeifferProduct p = as_coproduct ? coproduct_xmod(*a.p.algebra, *b.p.algebra)
                                           : peiffer_product(*a.p.algebra, *b.p.algebra);
    out["pcm"] = PyPcm{LoadedPcm{std::nullopt, p.pcm}};
    out["lx"] = morphism_to_json(p.lx).dump();
    out["ly"] = morphism_to_json(p.ly).dump();
  }
  return out;
}

py::dict reflect_py(const PyPcm& a) {
  py::dict out;
  if (a.is_group()) {
    GroupReflection r = reflect(*a.p.group);
    out["pcm"] = PyPcm{LoadedPcm{r.pcm, std::nullopt}};
    out["eta"] = morphism_to_json(r.eta).dump();
  } else {
    AlgebraReflection r = reflect(*a.p.algebra);
    out["pcm"] = PyPcm{LoadedPcm{std::nullopt, r.pcm}};
    out["eta"] = morphism_to_json(r.eta).dump();
  }
  return out;
}

std::vector<py::dict> check_theorems(std::uint64_t seed, std::size_t max_order,
                                     std::size_t max_dim, const std::string& variety,
                                     std::size_t count, bool corrupt) {
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.max_order = max_order;
  cfg.max_dim = max_dim;
  cfg.variety = variety;
  cfg.count = count;
  cfg.corrupt = corrupt;
  std::vector<py::dict> out;
  for (const auto& r : run_theorem_checks(cfg)) {
    py::dict d;
    d["check"] = r.check;
    d["instance"] = r.instance;
    d["pass"] = r.pass;
    d["witness"] = r.witness;
    d["seconds"] = r.seconds;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<PyPcm> generate(std::uint64_t seed, std::size_t count, const std::string& variety,
                            std::size_t max_order, std::size_t max_dim) {
  std::vector<PyPcm> out;
  if (variety == "mixed" || variety == "group")
    for (const auto& p : random_group_pcms(seed, count, max_order))
      out.push_back(PyPcm{LoadedPcm{p, std::nullopt}});
  if (variety != "group")
    for (const auto& p : random_algebra_pcms(seed, count, max_dim)) {
      if (variety == "assoc" && p->x->variety != AlgVariety::Associative) continue;
      if (variety == "leibniz" && p->x->variety != AlgVariety::Leibniz) continue;
      out.push_back(PyPcm{LoadedPcm{std::nullopt, p}});
    }
  return out;
}

}  // namespace

PYBIND11_MODULE(_pxmod, m) {
  m.doc() = "pre-crossed and crossed modules over a fixed base: core operations";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<PyPcm>(m, "Pcm")
      .def_property_readonly("kind", &PyPcm::kind)
      .def_property_readonly("name", &PyPcm::name)
      .def_property_readonly("size", &PyPcm::size,
                             "carrier order (groups) or dimension (algebras)")
      .def("dumps", &PyPcm::dumps, "serialize in the input file format")
      .def("is_crossed", &PyPcm::crossed, "returns (crossed, witness)")
      .def("__repr__", [](const PyPcm& p) {
        return "<Pcm " + p.kind() + " '" + p.name() + "' size " +
               std::to_string(p.size()) + ">";
      });

  m.def("load", &load, py::arg("path"), "load a pre-crossed module file");
  m.def("loads", &loads, py::arg("text"), "parse a pre-crossed module from a JSON string");
  m.def("commutator", &commutator, py::arg("pcm"), py::arg("x") = std::vector<int>{},
        py::arg("y") = std::vector<int>{},
        "Peiffer commutator of the subobjects generated by x and y (empty = whole)");
  m.def("product", [](const PyPcm& a, const PyPcm& b) { return product_impl(a, b, false); },
        py::arg("x"), py::arg("y"), "Peiffer product of two pre-crossed modules over one base");
  m.def("coproduct", [](const PyPcm& a, const PyPcm& b) { return product_impl(a, b, true); },
        py::arg("x"), py::arg("y"), "coproduct of two crossed modules over one base");
  m.def("reflect", &reflect_py, py::arg("pcm"),
        "reflection onto crossed modules; returns {'pcm', 'eta'}");
  m.def("check_theorems", &check_theorems, py::arg("seed") = 0, py::arg("max_order") = 16,
        py::arg("max_dim") = 4, py::arg("variety") = "mixed", py::arg("count") = 60,
        py::arg("corrupt") = false, "run the property-check suites; returns report dicts");
  m.def("generate", &generate, py::arg("seed") = 0, py::arg("count") = 10,
        py::arg("variety") = "mixed", py::arg("max_order") = 16, py::arg("max_dim") = 4,
        "seeded sample of validated instances");
}
