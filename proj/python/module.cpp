// Python bindings for the main kernel operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubik/suites.hpp"

namespace py = pybind11;
using namespace cubik;

namespace {

struct PyComplex {
  ComplexPtr ptr;
  std::string name = "complex";
};

struct PySimplicial {
  SimpPtr ptr;
  std::string name = "complex";
};

PyComplex make_shape(const std::string& kind, int n, int i, int eps) {
  if (kind == "cube") return {standard_cube(n)};
  if (kind == "boundary") return {boundary_cube(n)};
  if (kind == "open_box") return {open_box(n, i, eps)};
  if (kind == "inner_open_box") return {inner_open_box(n, i, eps).complex};
  if (kind == "inner_cube") return {inner_cube(n, i, eps).complex};
  if (kind == "K") return {shape_K()};
  if (kind == "Kprime") return {shape_K_prime()};
  if (kind == "marked_open_box") return {marked_open_box(n, i, eps)};
  if (kind == "three_out_of_four") return {three_out_of_four(i, eps)};
  if (kind == "point") return {point()};
  throw std::invalid_argument("unknown shape kind: " + kind);
}

FinCategory category_by_name(const std::string& name) {
  if (name.rfind("poset:", 0) == 0) return poset_category(std::stoi(name.substr(6)));
  if (name == "walking-iso") return walking_isomorphism();
  if (name == "parallel-pair") return parallel_pair();
  if (name.rfind("discrete:", 0) == 0) return discrete_category(std::stoi(name.substr(9)));
  for (const FinCategory& C : category_corpus())
    if (C.name == name) return C;
  throw std::invalid_argument("unknown category: " + name);
}

ConeKind cone_kind_by_name(const std::string& s) {
  if (s == "l1") return kLeftPositive;
  if (s == "l0") return kLeftNegative;
  if (s == "r1") return kRightPositive;
  if (s == "r0") return kRightNegative;
  throw std::invalid_argument("unknown cone kind: " + s);
}

}  // namespace

PYBIND11_MODULE(_cubik, m) {
  m.doc() = "kernel for finite cubical sets with connections";

  py::class_<PyComplex>(m, "Complex")
      .def_property_readonly("dim", [](const PyComplex& c) { return c.ptr->dim_bound(); })
      .def("count", [](const PyComplex& c, int n) { return c.ptr->count(n); })
      .def("names",
           [](const PyComplex& c, int n) {
             std::vector<std::string> out;
             for (int k = 0; k < c.ptr->count(n); ++k) out.push_back(c.ptr->name(CubeId{n, k}));
             return out;
           })
      .def("validate",
           [](const PyComplex& c) {
             ValidationReport r = validate(*c.ptr);
             return py::make_tuple(r.ok, r.message);
           })
      .def("marked_edges",
           [](const PyComplex& c) {
             std::vector<std::string> out;
             for (const CubeId& id : c.ptr->marked_edges()) out.push_back(c.ptr->name(id));
             return out;
           })
      .def("to_cub", [](const PyComplex& c) { return serialize_cub(*c.ptr, c.name); })
      .def("__repr__", [](const PyComplex& c) {
        std::string s = "<Complex dims";
        for (int n = 0; n <= c.ptr->dim_bound(); ++n)
          s += " " + std::to_string(c.ptr->count(n));
        return s + ">";
      });

  py::class_<PySimplicial>(m, "Simplicial")
      .def_property_readonly("dim", [](const PySimplicial& c) { return c.ptr->dim_bound(); })
      .def("count", [](const PySimplicial& c, int n) { return c.ptr->count(n); })
      .def("validate",
           [](const PySimplicial& c) {
             ValidationReport r = validate(*c.ptr);
             return py::make_tuple(r.ok, r.message);
           })
      .def("to_sim", [](const PySimplicial& c) { return serialize_sim(*c.ptr, c.name); })
      .def("__repr__", [](const PySimplicial& c) {
        std::string s = "<Simplicial dims";
        for (int n = 0; n <= c.ptr->dim_bound(); ++n)
          s += " " + std::to_string(c.ptr->count(n));
        return s + ">";
      });

  // operator calculus
  m.def("normalize_op",
        [](const std::string& word, int dom) { return render(parse_boxop(word, dom)); },
        py::arg("word"), py::arg("dom"));
  m.def("compose_ops",
        [](const std::string& g, const std::string& f, int f_dom) {
          BoxOp fo = parse_boxop(f, f_dom);
          BoxOp go = parse_boxop(g, fo.cod());
          return render(compose(go, fo));
        },
        py::arg("g"), py::arg("f"), py::arg("f_dom"));
  m.def("evaluate_op",
        [](const std::string& word, int dom) {
          VertexMap v = evaluate(parse_boxop(word, dom));
          std::vector<uint32_t> out(v.table.begin(), v.table.end());
          return out;
        },
        py::arg("word"), py::arg("dom"));
  m.def("hom_count",
        [](int a, int b) { return static_cast<int>(enumerate_hom(a, b).size()); });
  m.def("involute_op",
        [](const std::string& word, int dom, const std::string& kind) {
          Involution k = kind == "co"     ? Involution::Co
                         : kind == "coop" ? Involution::CoOp
                                          : Involution::Op;
          return render(involute(parse_boxop(word, dom), k));
        },
        py::arg("word"), py::arg("dom"), py::arg("kind"));

  // complexes and constructions
  m.def("shape", &make_shape, py::arg("kind"), py::arg("n") = 2, py::arg("i") = 1,
        py::arg("eps") = 0);
  m.def("from_cub", [](const std::string& text) {
    std::string nm;
    PyComplex c{parse_cub(text, &nm)};
    c.name = nm;
    return c;
  });
  m.def("from_sim", [](const std::string& text) {
    std::string nm;
    PySimplicial c{parse_sim(text, &nm)};
    c.name = nm;
    return c;
  });
  m.def("product", [](const PyComplex& a, const PyComplex& b) {
    return PyComplex{product(a.ptr, b.ptr).complex};
  });
  m.def("cone",
        [](const PyComplex& a, const std::string& kind) {
          return PyComplex{cone(a.ptr, cone_kind_by_name(kind)).complex};
        },
        py::arg("a"), py::arg("kind") = "l1");
  m.def("suspension", [](const PyComplex& a) { return PyComplex{suspension(a.ptr).complex}; });
  m.def("triangulate",
        [](const PyComplex& a) { return PySimplicial{triangulate(a.ptr).complex}; });
  m.def("nerve_truncation",
        [](const std::string& cat, int bound) {
          NerveComplex N(category_by_name(cat));
          return PyComplex{truncate_nerve(N, bound).complex};
        },
        py::arg("category"), py::arg("bound") = 2);
  m.def("standard_simplex", [](int n) { return PySimplicial{standard_simplex(n)}; });
  m.def("walking_iso_simplicial", []() { return PySimplicial{shape_J()}; });
  m.def("q_functor", [](const PySimplicial& s) { return PyComplex{q_functor(s.ptr).complex}; });
  m.def("integral",
        [](const PyComplex& a, int bound) {
          ExplicitCubes e{a.ptr};
          return PySimplicial{integral(e, bound).complex};
        },
        py::arg("a"), py::arg("bound") = 3);
  m.def("mapping_space",
        [](const PyComplex& a, const std::string& x0, const std::string& x1,
           const std::string& side, int bound) {
          auto v0 = a.ptr->find_by_name(x0);
          auto v1 = a.ptr->find_by_name(x1);
          if (!v0 || !v1) throw std::invalid_argument("vertex not found");
          ExplicitCubes e{a.ptr};
          auto M = mapping_space(e, a.ptr->ref(*v0), a.ptr->ref(*v1),
                                 side == "L" ? MapSide::L : MapSide::R, bound);
          return PyComplex{M.complex};
        },
        py::arg("a"), py::arg("x0"), py::arg("x1"), py::arg("side") = "R", py::arg("bound") = 2);
  m.def("natural_marking", [](const PyComplex& a) { return PyComplex{natural_marking(a.ptr)}; });
  m.def("isomorphic", [](const PyComplex& a, const PyComplex& b) {
    return find_isomorphism(a.ptr, b.ptr).has_value();
  });

  // checks
  m.def("is_quasicategory",
        [](const std::string& cat, int dim) {
          NerveComplex N(category_by_name(cat));
          QuasicatReport r = is_quasicategory_up_to(N, dim, 1000000000LL);
          return r.ok;
        },
        py::arg("category"), py::arg("dim") = 3);
  m.def("is_quasicategory_complex",
        [](const PyComplex& a, int dim) {
          ExplicitCubes e{a.ptr};
          QuasicatReport r = is_quasicategory_up_to(e, dim, 1000000000LL);
          return r.ok;
        },
        py::arg("a"), py::arg("dim") = 2);
  m.def("ho_table",
        [](const std::string& cat) {
          NerveComplex N(category_by_name(cat));
          HoCategory<NerveComplex> H = ho(N);
          std::vector<std::tuple<std::string, int, int>> out;
          for (const auto& mor : H.cat.morphisms) out.emplace_back(mor.name, mor.src, mor.dst);
          return out;
        });
  m.def("theta_verify",
        [](const std::string& cat, int bound) {
          NerveComplex N(category_by_name(cat));
          ThetaFamily<NerveComplex> F(N, bound);
          return render_theta_report(verify_theta(F));
        },
        py::arg("category") = "poset:2", py::arg("bound") = 4);
  m.def("run_suite",
        [](const std::string& name, unsigned seed) {
          SuiteContext ctx;
          ctx.seed = seed;
          std::vector<SuiteResult> results = run_suite_by_name(name, ctx);
          bool ok = true;
          std::string log;
          for (const SuiteResult& r : results) {
            ok = ok && r.ok;
            log += (r.ok ? "PASS " : "FAIL ") + r.name + "\n";
            for (const std::string& line : r.lines) log += line + "\n";
          }
          return py::make_tuple(ok, log);
        },
        py::arg("name"), py::arg("seed") = 2026);
}
