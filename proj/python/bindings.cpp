#include "gwloc/cli.hpp"
#include "gwloc/fixed_graphs.hpp"
#include "gwloc/localization.hpp"
#include "gwloc/model.hpp"
#include "gwloc/relations.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace pybind11::detail {

// gwloc::Rational <-> fractions.Fraction (ints and "a/b" strings are accepted on input).
template <>
struct type_caster<gwloc::Rational> {
    PYBIND11_TYPE_CASTER(gwloc::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool convert) {
        if (!src) return false;
        const bool exact = py::isinstance<py::int_>(src) || py::isinstance(src, fraction_type());
        if (!exact && !(convert && py::isinstance<py::str>(src))) return false;
        try {
            value = gwloc::Rational::parse(py::str(src).cast<std::string>());
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const gwloc::Rational& r, return_value_policy, handle) {
        auto as_int = [](const std::string& digits) {
            return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
        };
        return fraction_type()(as_int(r.numerator_str()), as_int(r.denominator_str())).release();
    }

    static py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }
};

} // namespace pybind11::detail

namespace {

std::vector<gwloc::Insertion> to_insertions(const std::vector<int>& powers) {
    std::vector<gwloc::Insertion> out;
    for (int p : powers) out.push_back({p});
    return out;
}

gwloc::WeightVector to_weights(const std::vector<gwloc::Rational>& values) { return gwloc::WeightVector(values); }

gwloc::BPSTable bps(int genus, gwloc::DegreeTable entries) { return {genus, std::move(entries)}; }

} // namespace

PYBIND11_MODULE(_gwloc, m) {
    m.doc() = "Genus-zero Gromov-Witten invariants of complete intersections by torus localization";
    m.attr("ENGINE_VERSION") = gwloc::kEngineVersion;

    auto invalid = py::register_exception<gwloc::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<gwloc::UnsupportedDimension>(m, "UnsupportedDimension", invalid);
    py::register_exception<gwloc::DimensionMismatch>(m, "DimensionMismatch", PyExc_RuntimeError);
    py::register_exception<gwloc::DegenerateWeights>(m, "DegenerateWeights", PyExc_RuntimeError);
    py::register_exception<gwloc::WeightIndependenceFailure>(m, "WeightIndependenceFailure", PyExc_RuntimeError);
    py::register_exception<gwloc::DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

    py::class_<gwloc::CITarget>(m, "CITarget")
        .def(py::init([](int n, std::vector<int> degrees, int d, const std::vector<int>& insertions) {
                 return gwloc::CITarget(n, std::move(degrees), d, to_insertions(insertions));
             }),
             py::arg("ambient_dim"), py::arg("degrees") = std::vector<int>{}, py::arg("curve_degree") = 1,
             py::arg("insertions") = std::vector<int>{})
        .def_property_readonly("ambient_dim", &gwloc::CITarget::ambient_dim)
        .def_property_readonly("degrees", &gwloc::CITarget::degrees)
        .def_property_readonly("curve_degree", &gwloc::CITarget::curve_degree)
        .def_property_readonly("insertions",
                               [](const gwloc::CITarget& t) {
                                   std::vector<int> out;
                                   for (const auto& i : t.insertions()) out.push_back(i.power);
                                   return out;
                               })
        .def_property_readonly("marks", &gwloc::CITarget::marks)
        .def("canonical_key", &gwloc::CITarget::canonical_key)
        .def("__eq__", [](const gwloc::CITarget& a, const gwloc::CITarget& b) { return a == b; })
        .def("__repr__", [](const gwloc::CITarget& t) { return "CITarget(" + t.canonical_key() + ")"; });

    py::class_<gwloc::SeedTotal>(m, "SeedTotal")
        .def_readonly("seed", &gwloc::SeedTotal::seed)
        .def_readonly("attempts", &gwloc::SeedTotal::attempts)
        .def_readonly("value", &gwloc::SeedTotal::value);

    py::class_<gwloc::EngineResult>(m, "EngineResult")
        .def_readonly("value", &gwloc::EngineResult::value)
        .def_readonly("graph_count", &gwloc::EngineResult::graph_count)
        .def_readonly("weight_seeds", &gwloc::EngineResult::weight_seeds)
        .def_readonly("per_seed", &gwloc::EngineResult::per_seed)
        .def_readonly("target", &gwloc::EngineResult::target);

    py::class_<gwloc::GraphVertex>(m, "GraphVertex")
        .def_readonly("label", &gwloc::GraphVertex::label)
        .def_readonly("marks", &gwloc::GraphVertex::marks);
    py::class_<gwloc::GraphEdge>(m, "GraphEdge")
        .def_readonly("a", &gwloc::GraphEdge::a)
        .def_readonly("b", &gwloc::GraphEdge::b)
        .def_readonly("degree", &gwloc::GraphEdge::degree);
    py::class_<gwloc::FixedGraph>(m, "FixedGraph")
        .def_property_readonly("vertices", &gwloc::FixedGraph::vertices)
        .def_property_readonly("edges", &gwloc::FixedGraph::edges)
        .def_property_readonly("aut_order", &gwloc::FixedGraph::aut_order)
        .def("canonical_form", [](const gwloc::FixedGraph& g) { return gwloc::canonical_form(g); });

    m.def("sample_weights", [](std::uint64_t seed, int n, int attempt) { return gwloc::sample_weights(seed, n, attempt).values(); },
          py::arg("seed"), py::arg("n"), py::arg("attempt") = 0);
    m.def("sum_invariant", &gwloc::sum_invariant, py::arg("target"), py::arg("seeds") = std::vector<std::uint64_t>{1, 2, 3},
          py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "sum_at_weights",
        [](const gwloc::CITarget& t, const std::vector<gwloc::Rational>& w, int jobs) { return gwloc::sum_at_weights(t, to_weights(w), jobs); },
        py::arg("target"), py::arg("weights"), py::arg("jobs") = 1);
    m.def(
        "lines_closed_form",
        [](int n, const std::vector<int>& degrees, const std::vector<gwloc::Rational>& w) {
            return gwloc::lines_closed_form(n, degrees, to_weights(w));
        },
        py::arg("n"), py::arg("degrees"), py::arg("weights"));
    m.def("enumerate_graphs", &gwloc::enumerate_graphs, py::arg("n"), py::arg("d"), py::arg("k") = 0);
    m.def("count_graphs", &gwloc::count_graphs, py::arg("n"), py::arg("d"), py::arg("k") = 0);

    m.def("is_calabi_yau", &gwloc::is_calabi_yau);
    m.def("positivity_check", &gwloc::positivity_check);
    m.def(
        "expected_dimension",
        [](int genus, int marks, int c1_dot_A, int half_dim, std::optional<int> bundle) {
            return gwloc::expected_dimension({genus, marks, c1_dot_A, half_dim, bundle});
        },
        py::arg("genus"), py::arg("marks"), py::arg("c1_dot_A"), py::arg("half_dim"), py::arg("bundle_c1_dot_A") = py::none());

    m.def("genus1_from_reduced", &gwloc::genus1_from_reduced);
    m.def("gw_difference", &gwloc::gw_difference, py::arg("real_dim"), py::arg("c1_dot_A"), py::arg("genus0"));
    m.def("gw0_from_bps0", [](gwloc::DegreeTable n0) { return gwloc::gw0_from_bps0(bps(0, std::move(n0))); });
    m.def("bps0_from_gw0", [](const gwloc::DegreeTable& N0) { return gwloc::bps0_from_gw0(N0).entries; });
    m.def("gw1_from_bps", [](gwloc::DegreeTable n1, gwloc::DegreeTable n0) {
        return gwloc::gw1_from_bps(bps(1, std::move(n1)), bps(0, std::move(n0)));
    });
    m.def("bps1_from_gw1",
          [](const gwloc::DegreeTable& N1, gwloc::DegreeTable n0) { return gwloc::bps1_from_gw1(N1, bps(0, std::move(n0))).entries; });
    m.def("wdvv_p2", &gwloc::wdvv_p2, py::arg("max_degree"));

    py::class_<gwloc::QuinticTableRow>(m, "QuinticTableRow")
        .def_readonly("degree", &gwloc::QuinticTableRow::degree)
        .def_readonly("reduced_term", &gwloc::QuinticTableRow::reduced_term)
        .def_readonly("genus1_gw", &gwloc::QuinticTableRow::genus1_gw)
        .def_readonly("genus1_bps", &gwloc::QuinticTableRow::genus1_bps)
        .def_readonly("genus0_gw", &gwloc::QuinticTableRow::genus0_gw)
        .def_readonly("genus0_bps", &gwloc::QuinticTableRow::genus0_bps)
        .def_readonly("regenerated_genus1_gw", &gwloc::QuinticTableRow::regenerated_genus1_gw)
        .def_readonly("regenerated_genus1_bps", &gwloc::QuinticTableRow::regenerated_genus1_bps)
        .def_readonly("consistent", &gwloc::QuinticTableRow::consistent)
        .def_readonly("corrected_genus1_gw", &gwloc::QuinticTableRow::corrected_genus1_gw)
        .def_readonly("correction_via_reduced", &gwloc::QuinticTableRow::correction_via_reduced)
        .def_readonly("correction_via_bps", &gwloc::QuinticTableRow::correction_via_bps)
        .def_readonly("routes_agree", &gwloc::QuinticTableRow::routes_agree);

    m.def(
        "reproduce_table1",
        [](int max_degree, const std::vector<std::uint64_t>& seeds, int jobs) {
            const auto& t = gwloc::builtin_table1();
            const gwloc::CITarget quintic(4, {5}, 1);
            return gwloc::reproduce_table1(max_degree, t.reduced, t.genus1_gw, t.genus1_bps, [&](int d) {
                return gwloc::sum_invariant(quintic.with_curve_degree(d), seeds, jobs).value;
            });
        },
        py::arg("max_degree"), py::arg("seeds") = std::vector<std::uint64_t>{1, 2, 3}, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = gwloc::run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
