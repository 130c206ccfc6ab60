#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quandle/classify.hpp"
#include "quandle/congruence.hpp"
#include "quandle/corpus.hpp"
#include "quandle/error.hpp"
#include "quandle/io.hpp"
#include "quandle/orbitseries.hpp"
#include "quandle/verify.hpp"

namespace py = pybind11;
using namespace quandle;

namespace {

Caps make_caps(std::size_t group, std::size_t work) {
  Caps c;
  c.group = group;
  c.work = work;
  return c;
}

Quotient quotient_by_classes(Quandle const& q, std::vector<ElementSet> classes) {
  return quotient(q, Congruence::verify(q, Partition(q.order(), std::move(classes))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite quandles: orbit series, reductivity and congruences";

  auto base = py::register_exception<Error>(m, "QuandleError");
  py::register_exception<AxiomViolation>(m, "AxiomViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnknownName>(m, "UnknownName", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<NotACongruence>(m, "NotACongruence", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<Quandle>(m, "Quandle")
      .def(py::init([](Table const& t, std::string label) {
             return validate(t, std::move(label));
           }),
           py::arg("table"), py::arg("label") = "")
      .def_property_readonly("order", &Quandle::order)
      .def_property_readonly("label", &Quandle::label)
      .def("table", &Quandle::table)
      .def("op", [](Quandle const& q, Element a, Element b) {
        if (a >= q.order() || b >= q.order()) throw py::index_error("element out of range");
        return q(a, b);
      })
      .def("with_label", &Quandle::with_label)
      .def("__len__", &Quandle::order)
      .def("__eq__", [](Quandle const& a, Quandle const& b) { return a.same_table(b); })
      .def("__repr__", [](Quandle const& q) {
        return "<Quandle " + (q.label().empty() ? std::string("?") : q.label()) +
               " of order " + std::to_string(q.order()) + ">";
      });

  py::class_<GroupTable>(m, "GroupTable")
      .def_static("from_table", &GroupTable::from_table, py::arg("table"),
                  py::arg("label") = "")
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("label", &GroupTable::label)
      .def_property_readonly("identity", &GroupTable::identity)
      .def("mul", &GroupTable::mul)
      .def("inverse", &GroupTable::inverse)
      .def("table", &GroupTable::table)
      .def("conjugacy_classes", &GroupTable::conjugacy_classes);

  m.def("trivial", &trivial, py::arg("n"));
  m.def("dihedral", &dihedral, py::arg("n"));
  m.def("affine", &affine, py::arg("n"), py::arg("t"));
  m.def("conj", &conj, py::arg("group"), py::arg("exponent") = 1);
  m.def("disjoint_union",
        py::overload_cast<Quandle const&, Quandle const&>(&disjoint_union));
  m.def("direct_product", &direct_product);
  m.def("induced_subquandle", &induced_subquandle);
  m.def("subquandle_closure", &subquandle_closure);
  m.def("orbits", py::overload_cast<Quandle const&>(&orbits));
  m.def("is_isomorphic", [](Quandle const& a, Quandle const& b) {
    auto iso = is_isomorphic(a, b);
    return iso ? std::optional<std::vector<Element>>(iso->map) : std::nullopt;
  });

  m.def("builtin_quandle", &builtin_quandle);
  m.def("builtin_group", &builtin_group);
  m.def("builtin_quandle_names", &builtin_quandle_names);
  m.def("builtin_group_names", &builtin_group_names);
  m.def("enumerate_quandles", [](std::size_t n) { return enumerate_quandles(n); });

  m.def("parse_qnd", [](std::string const& s) { return parse_qnd(s); });
  m.def("serialize_qnd", &serialize_qnd);
  m.def("read_qnd_file", &read_qnd_file);
  m.def("write_qnd_file", &write_qnd_file);

  py::class_<OrbitTreeNode>(m, "OrbitTreeNode")
      .def_readonly("subset", &OrbitTreeNode::subset)
      .def_readonly("children", &OrbitTreeNode::children)
      .def_readonly("depth", &OrbitTreeNode::depth)
      .def("is_leaf", &OrbitTreeNode::is_leaf);
  m.def("orbit_tree", &orbit_tree, py::arg("q"), py::arg("depth_cap") = 0);
  m.def("node_count", &node_count);
  m.def("tree_depth", &tree_depth);
  m.def("tree_text", &tree_text);
  m.def("tree_dot", &tree_dot);
  m.def("os_degree", [](Quandle const& q) { return degrees(q).os_degree; });
  m.def("tos_degree", [](Quandle const& q) { return degrees(q).tos_degree; });
  m.def("principal_series", &principal_series);
  m.def("is_ncs", &is_ncs, py::arg("q"), py::arg("cap") = std::size_t{1} << 20);

  m.def("is_n_reductive", &is_n_reductive, py::arg("q"), py::arg("n"),
        py::arg("work_cap") = kDefaultWorkCap);
  m.def(
      "reductive_degree",
      [](Quandle const& q, std::size_t group_cap, std::size_t work_cap) {
        return reductive_degree(q, make_caps(group_cap, work_cap));
      },
      py::arg("q"), py::arg("group_cap") = kDefaultGroupCap,
      py::arg("work_cap") = kDefaultWorkCap);
  m.def(
      "reductivity_routes",
      [](Quandle const& q) {
        auto const r = reductivity_routes(q);
        py::dict d;
        d["o_chain"] = r.o_chain;
        d["identity"] = r.identity;
        d["inn_class"] = r.inn_class;
        d["l_chain"] = r.l_chain;
        return d;
      },
      py::arg("q"));
  m.def("is_n_locally_reductive", &is_n_locally_reductive);
  m.def("locally_reductive_degree", &locally_reductive_degree);
  m.def("is_medial", &is_medial);
  m.def("is_connected", &is_connected);
  m.def("is_faithful", &is_faithful);

  m.def(
      "classify",
      [](Quandle const& q, std::size_t group_cap, std::size_t work_cap) {
        return py::module_::import("json").attr("loads")(
            report_json(classify(q, make_caps(group_cap, work_cap))));
      },
      py::arg("q"), py::arg("group_cap") = kDefaultGroupCap,
      py::arg("work_cap") = kDefaultWorkCap);

  m.def(
      "congruences",
      [](Quandle const& q, std::size_t cap) {
        std::vector<std::vector<ElementSet>> out;
        for (auto const& c : all_congruences(q, cap)) out.push_back(c.classes());
        return out;
      },
      py::arg("q"), py::arg("cap") = kDefaultCongruenceCap);
  m.def("quotient", [](Quandle const& q, std::vector<ElementSet> classes) {
    Quotient r = quotient_by_classes(q, std::move(classes));
    return py::make_tuple(r.quandle, r.projection);
  });
  m.def("inn_order", [](Quandle const& q) { return inn(q).size(); });
  m.def("trans_order", [](Quandle const& q) { return trans(q).size(); });

  m.def(
      "verify",
      [](std::size_t max_order, bool builtins, std::size_t tower) {
        Corpus const c = build_corpus({.exhaustive_up_to = max_order,
                                       .include_builtins = builtins,
                                       .dihedral_tower_up_to = tower});
        SuiteReport const r = verify_suite(c.quandles, c.groups);
        py::dict out;
        for (auto const& check : r.checks) {
          py::dict entry;
          entry["passed"] = check.passed();
          entry["checked"] = check.checked;
          entry["skipped"] = check.skipped;
          std::vector<std::string> failures;
          for (auto const& f : check.failures) failures.push_back(f.message);
          entry["failures"] = failures;
          out[py::str(check.name)] = entry;
        }
        return out;
      },
      py::arg("max_order") = 0, py::arg("builtins") = true, py::arg("tower") = 4);
}
