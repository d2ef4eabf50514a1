#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grpd/cli.hpp"
#include "grpd/constructions.hpp"
#include "grpd/gdf.hpp"
#include "grpd/partial_action.hpp"
#include "grpd/series.hpp"

namespace py = pybind11;
using namespace grpd;

namespace {

ElemSet to_set(const Groupoid& g, const std::vector<std::string>& labels) {
  return subset_of_labels(g, labels);
}

std::vector<std::string> to_labels(const Groupoid& g, const ElemSet& s) {
  std::vector<std::string> out;
  for (Elem e : s.members()) out.push_back(g.label(e));
  return out;
}

py::dict axiom_dict(const AxiomReport& r, const PartialTable& t) {
  py::dict out;
  auto add = [&](const auto& verdicts) {
    for (const auto& v : verdicts) {
      std::vector<std::string> ce;
      for (Elem e : v.counterexample) ce.push_back(t.label(e));
      out[py::str(std::string(to_string(v.axiom)))] = py::make_tuple(v.holds, ce);
    }
  };
  add(r.identity_system);
  add(r.inverse_map_system);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groupoids, their quotients and series, and the Exel semigroup";

  // args are (kind, message, witness).
  static PyObject* grpd_error = PyErr_NewException("grpd._core.GrpdError", PyExc_ValueError, nullptr);
  m.attr("GrpdError") = py::handle(grpd_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.what(), e.witness());
      PyErr_SetObject(grpd_error, args.ptr());
    }
  });

  py::class_<Groupoid>(m, "Groupoid")
      .def(py::init([](std::vector<std::string> labels,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& products) {
             std::vector<Triple> t;
             for (const auto& [l, r, p] : products) t.push_back({l, r, p});
             return build_from_table(std::move(labels), t);
           }),
           py::arg("elements"), py::arg("products"))
      .def("__len__", &Groupoid::size)
      .def_property_readonly("labels", &Groupoid::labels)
      .def_property_readonly("identities",
                             [](const Groupoid& g) { return to_labels(g, g.identity_set()); })
      .def("compose",
           [](const Groupoid& g, const std::string& a, const std::string& b) -> std::optional<std::string> {
             auto p = g.compose(g.at(a), g.at(b));
             if (!p) return std::nullopt;
             return g.label(*p);
           })
      .def("source", [](const Groupoid& g, const std::string& a) { return g.label(g.source(g.at(a))); })
      .def("target", [](const Groupoid& g, const std::string& a) { return g.label(g.target(g.at(a))); })
      .def("inverse", [](const Groupoid& g, const std::string& a) { return g.label(g.inverse(g.at(a))); })
      .def("is_group", [](const Groupoid& g) { return is_group(g); })
      .def("to_json", [](const Groupoid& g) { return emit_document(groupoid_document(g), EmitMode::Machine); })
      .def("__eq__", [](const Groupoid& a, const Groupoid& b) { return a == b; })
      .def("__repr__", [](const Groupoid& g) {
        return "<Groupoid of " + std::to_string(g.size()) + " elements, " +
               std::to_string(g.identities().size()) + " identities>";
      });

  m.def("cyclic_group", &cyclic_group, py::arg("n"));
  m.def("symmetric_group_3", &symmetric_group_3);
  m.def("pair_groupoid", &pair_groupoid, py::arg("points"));
  m.def("direct_product", &direct_product);
  m.def("disjoint_union", &disjoint_union);

  m.def("load", [](const std::string& path) { return load_document(path).groupoid(); },
        py::arg("path"), "Loads a groupoid or group document.");
  m.def("parse", [](const std::string& text) { return parse_document(text).groupoid(); },
        py::arg("text"));

  m.def("check_axioms",
        [](const std::vector<std::string>& labels,
           const std::vector<std::tuple<std::string, std::string, std::string>>& products) {
          std::vector<Triple> t;
          for (const auto& [l, r, p] : products) t.push_back({l, r, p});
          const PartialTable table = PartialTable::from_triples(labels, t);
          const AxiomReport r = check_axioms(table);
          return py::make_tuple(r.identity_system_holds(), r.inverse_map_system_holds(),
                                axiom_dict(r, table));
        },
        py::arg("elements"), py::arg("products"),
        "Returns (identity system holds, inverse-map system holds, per-axiom verdicts).");

  m.def("subgroupoids",
        [](const Groupoid& g, const std::string& filter) {
          SubFilter f = SubFilter::All;
          if (filter == "wide") f = SubFilter::Wide;
          else if (filter == "normal") f = SubFilter::Normal;
          else if (filter != "all") throw py::value_error("filter must be all, wide or normal");
          std::vector<std::vector<std::string>> out;
          for (const auto& s : enumerate_subgroupoids(g, f)) out.push_back(to_labels(g, s.members()));
          return out;
        },
        py::arg("g"), py::arg("filter") = "all");

  m.def("is_normal",
        [](const Groupoid& g, const std::vector<std::string>& members) {
          return is_normal(g, to_set(g, members)).normal;
        });

  m.def("quotient",
        [](const Groupoid& g, const std::vector<std::string>& members) {
          return quotient(g, to_set(g, members)).groupoid;
        });

  m.def("isomorphic", [](const Groupoid& a, const Groupoid& b) {
    return find_isomorphism(a, b).has_value();
  });

  m.def("composition_factors", [](const Groupoid& g) {
    std::vector<std::size_t> sizes;
    for (const auto& f : composition_series(g).factors)
      if (is_nontrivial_factor(f)) sizes.push_back(f.size());
    return sizes;
  }, "Orders of the nontrivial factors of the first composition series.");

  m.def("all_composition_series", [](const Groupoid& g) {
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& s : all_composition_series(g)) {
      std::vector<std::vector<std::string>> chain;
      for (const auto& t : s.chain) chain.push_back(to_labels(g, t));
      out.push_back(std::move(chain));
    }
    return out;
  });

  m.def("exel_semigroup", [](const Groupoid& g) {
    return exel_semigroup(g).semigroup.labels();
  }, "Labels (A, g) of the elements of E(G).");

  m.def("exel_normal_form", [](const Groupoid& g, const std::vector<std::string>& word) {
    std::vector<Elem> w;
    for (const auto& l : word) w.push_back(g.at(l));
    const ExelSemigroup e = exel_semigroup(g);
    return e.label(exel_normal_form(g, w));
  });

  m.def("action_counts", [](const Groupoid& g, std::size_t points) {
    const RoundtripReport r = correspondence_roundtrip(g, points);
    py::dict d;
    d["partial_actions"] = r.partial_actions;
    d["semigroup_actions"] = r.semigroup_actions;
    d["inductive_homs"] = r.inductive_homs;
    d["global_actions"] = r.global_actions;
    d["counts_match"] = r.counts_match;
    d["maps_inverse"] = r.maps_inverse;
    return d;
  }, py::arg("group"), py::arg("points"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one grpd command in process; returns (exit code, stdout, stderr).");
}
