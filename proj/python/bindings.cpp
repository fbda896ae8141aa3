#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "cdl/ap3.hpp"
#include "cdl/caps.hpp"
#include "cdl/census.hpp"
#include "cdl/checks.hpp"
#include "cdl/constructions.hpp"
#include "cdl/point_io.hpp"
#include "cdl/stripping.hpp"

namespace py = pybind11;
using namespace cdl;

namespace {

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (auto item : seq) {
    if (py::isinstance<py::str>(item))
      out.push_back(rational_from_string(item.cast<std::string>()));
    else if (py::isinstance<py::int_>(item))
      out.push_back(make_rational(item.cast<long long>()));
    else
      out.push_back(Rational(item.cast<double>()));
  }
  return out;
}

template <class K>
py::list points_as_list(const ConvexInstance<K>& inst) {
  py::list out;
  for (const auto& p : inst.points()) {
    if constexpr (K::is_exact) {
      out.append(py::make_tuple(to_string(p.x), to_string(p.y)));
    } else {
      out.append(py::make_tuple(p.x, p.y));
    }
  }
  return out;
}

template <class K>
py::dict census_dict(const ConvexInstance<K>& inst) {
  return json_to_py(census_report_json(census(inst)));
}

template <class K>
py::dict decompose_dict(const ConvexInstance<K>& inst) {
  auto caps = cap_decomposition(inst);
  py::list cap_list;
  for (const auto& cap : caps) {
    py::dict c;
    c["start"] = cap.endpoint_a();
    c["end"] = cap.endpoint_b();
    c["size"] = cap.size();
    c["witnessed_edges_in_cap"] = witnessed_edges_in_cap(cap);
    cap_list.append(c);
  }
  py::dict out;
  out["n"] = inst.size();
  out["caps"] = cap_list;
  out["good_edges"] = good_edge_count(inst);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-geometry census toolkit for convex point sets";

  py::register_exception<internal_error>(m, "InvariantError");

  py::class_<ExactInstance>(m, "ExactInstance")
      .def("__len__", &ExactInstance::size)
      .def("points", &points_as_list<ExactKernel>);
  py::class_<FloatInstance>(m, "FloatInstance")
      .def("__len__", &FloatInstance::size)
      .def("points", &points_as_list<FloatKernel>);

  m.def("regular_ngon", &regular_ngon, py::arg("n"), py::arg("eps") = 1e-9);
  m.def("quarter_arc_with_center", &quarter_arc_with_center, py::arg("n"),
        py::arg("eps") = 1e-9);
  m.def(
      "rational_concyclic",
      [](const py::sequence& params) { return rational_concyclic(to_rationals(params)); },
      py::arg("params"));
  m.def("random_convex", &random_convex, py::arg("n"), py::arg("seed"));

  m.def("census", &census_dict<ExactKernel>);
  m.def("census", &census_dict<FloatKernel>);
  m.def("decompose", &decompose_dict<ExactKernel>);
  m.def("decompose", &decompose_dict<FloatKernel>);
  m.def("good_edge_count", [](const ExactInstance& i) { return good_edge_count(i); });
  m.def("good_edge_count", [](const FloatInstance& i) { return good_edge_count(i); });
  m.def("max_point_distinct", [](const ExactInstance& i) { return max_point_distinct(i); });
  m.def("max_point_distinct", [](const FloatInstance& i) { return max_point_distinct(i); });
  m.def("total_distinct", [](const ExactInstance& i) { return total_distinct(i); });
  m.def("total_distinct", [](const FloatInstance& i) { return total_distinct(i); });

  m.def(
      "symbolic_arc_census",
      [](unsigned long m_pts, bool include_center, const std::string& arc_fraction) {
        ArcCensus c = symbolic_arc_census(m_pts, include_center,
                                          rational_from_string(arc_fraction));
        return py::make_tuple(c.z, c.equilateral_triples);
      },
      py::arg("m"), py::arg("include_center") = true, py::arg("arc_fraction") = "1/2");

  m.def(
      "count_ap3",
      [](const py::sequence& red, const py::sequence& blue) {
        return count_bichromatic_ap3(
            Ap3Instance::make(to_rationals(red), to_rationals(blue)));
      },
      py::arg("red"), py::arg("blue"));
  m.def(
      "max_ap3",
      [](unsigned t, long long bound) {
        Ap3SearchResult r = max_bichromatic_ap3(t, bound);
        py::dict out;
        out["best"] = r.best;
        out["red"] = r.red;
        out["blue"] = r.blue;
        return out;
      },
      py::arg("t"), py::arg("bound"));
  m.def(
      "embed_counts",
      [](const py::sequence& red, const py::sequence& blue) {
        Ap3Instance inst = Ap3Instance::make(to_rationals(red), to_rationals(blue));
        ArcEmbedding emb = arc_embedding(inst);
        auto cap = emb.cap();
        return py::make_tuple(count_bichromatic_ap3(inst),
                              straddling_witnessed_edges(cap, emb.split));
      },
      py::arg("red"), py::arg("blue"));

  m.def(
      "strip",
      [](const ExactInstance& inst, const std::string& a, const std::string& d) {
        return json_to_py(strip_trace_json(
            strip_procedure(inst, rational_from_string(a), rational_from_string(d))));
      },
      py::arg("instance"), py::arg("a"), py::arg("d"));
  m.def(
      "bound_report",
      [](const std::string& a, const std::string& d, const std::string& variant) {
        return json_to_py(bound_report_json(
            bound_report(rational_from_string(a), rational_from_string(d),
                         variant == "conservative" ? Case1Variant::Conservative
                                                   : Case1Variant::Final)));
      },
      py::arg("a"), py::arg("d"), py::arg("variant") = "final");
  m.def(
      "optimize_parameters",
      [](unsigned resolution) {
        return json_to_py(optimize_result_json(optimize_parameters(resolution)));
      },
      py::arg("resolution") = 64);
  m.def("epsilon_chain", []() {
    EpsilonChain c = epsilon_chain();
    py::dict out;
    out["alpha"] = to_string(c.alpha);
    out["coefficient"] = to_string(c.coefficient);
    out["excess"] = to_string(c.excess);
    return out;
  });
  m.def(
      "verify",
      [](const std::string& suite, unsigned long long trials, std::uint64_t seed) {
        return json_to_py(campaign_report_json(run_campaign(suite, trials, seed)));
      },
      py::arg("suite"), py::arg("trials") = 1000, py::arg("seed") = 1);

  m.attr("__version__") = "0.1.0";
}
