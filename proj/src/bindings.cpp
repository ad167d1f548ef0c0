#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adc/identities.hpp"
#include "adc/io.hpp"
#include "adc/nerve.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"

namespace py = pybind11;
using namespace adc;

namespace {

DualitySelector selector_from_string(const std::string& tau) {
    if (tau == "odd") return DualitySelector::odd();
    if (tau == "even") return DualitySelector::even();
    if (tau == "total") return DualitySelector::total();
    throw InvalidArgument("unknown duality selector '" + tau + "'");
}

py::dict report_to_dict(const SuiteReport& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["params"] = rep.params;
    d["pass"] = rep.pass();
    d["inconclusive"] = rep.inconclusive;
    d["summary"] = rep.summary();
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict ch;
        ch["name"] = c.name;
        ch["passed"] = c.passed;
        ch["witness"] = c.witness;
        checks.append(ch);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(adcpy, m) {
    m.doc() = "Based augmented directed chain complexes: shapes, constructions, "
              "Steiner checks, nerve enumeration, and verification suites.";

    py::class_<BasedADC>(m, "BasedADC")
        .def_property_readonly("name", &BasedADC::name)
        .def_property_readonly("size", &BasedADC::size)
        .def_property_readonly("max_degree", &BasedADC::max_degree)
        .def("degree_ranks", &BasedADC::degree_ranks)
        .def("labels",
             [](const BasedADC& a) {
                 std::vector<std::string> out;
                 for (int i = 0; i < a.size(); ++i) out.push_back(a.basis(i).label);
                 return out;
             })
        .def("is_valid", [](const BasedADC& a) { return a.validate().ok(); })
        .def("__eq__", [](const BasedADC& a, const BasedADC& b) { return a == b; })
        .def("__repr__", [](const BasedADC& a) {
            return "<BasedADC '" + a.name() + "', " + std::to_string(a.size()) + " generators>";
        });

    m.def("unit", &unit);
    m.def("globe", &globe, py::arg("q"));
    m.def("cube", &cube, py::arg("n"));
    m.def("oriental", &oriental, py::arg("n"));
    m.def("theta", [](const std::string& expr) { return theta(parse_theta(expr)); },
          py::arg("expr"));

    m.def("tensor", [](const BasedADC& a, const BasedADC& b) { return tensor(a, b); });
    m.def("suspend", &suspend);
    m.def("wedge", &wedge);
    m.def("direct_sum", &direct_sum);
    m.def("dual",
          [](const BasedADC& a, const std::string& tau) {
              return dual(a, selector_from_string(tau));
          },
          py::arg("a"), py::arg("tau") = "total");

    m.def("is_strong_steiner", &is_strong_steiner);
    m.def("is_total_order", &is_total_order);
    m.def("is_unital", [](const BasedADC& a) { return unital(a).ok(); });
    m.def("is_loop_free", [](const BasedADC& a) { return strongly_loop_free(a).loop_free; });
    m.def("automorphism_count", [](const BasedADC& a) {
        AllIsosResult r = automorphisms(share(a));
        if (r.status == SearchStatus::Inconclusive)
            throw std::runtime_error("automorphism search budget exceeded");
        return r.isos.size();
    });
    m.def("isomorphic", [](const BasedADC& a, const BasedADC& b) {
        IsoResult r = iso_search(share(a), share(b));
        if (r.status == SearchStatus::Inconclusive)
            throw std::runtime_error("isomorphism search budget exceeded");
        return r.found();
    });

    m.def("nerve_counts",
          [](const BasedADC& a, int max_dim, Coeff cap) {
              CellEnumeration en = enumerate_cells(a, max_dim, cap);
              py::dict d;
              d["counts"] = en.counts_by_dim(max_dim);
              d["truncated"] = en.truncated;
              return d;
          },
          py::arg("a"), py::arg("max_dim"), py::arg("cap") = 8);

    m.def("serialize", &serialize_adc);
    m.def("parse", &parse_adc);
    m.def("to_dot", &export_dot);

    m.def("verify_cube_order", [](int n) { return report_to_dict(verify_cube_order(n)); });
    m.def("verify_cube_aut_trivial",
          [](int n) { return report_to_dict(verify_cube_aut_trivial(n)); });
    m.def("verify_oriental_cube_retract",
          [](int n) { return report_to_dict(verify_oriental_cube_retract(n)); });
    m.def("verify_wedge_retract",
          [](int n, int mm) { return report_to_dict(verify_wedge_retract(n, mm)); });
    m.def("verify_cone_quotient", [](int n) { return report_to_dict(verify_cone_quotient(n)); });
    m.def("verify_suspension_quotient",
          [](int n) { return report_to_dict(verify_suspension_quotient(n)); });
    m.def("verify_sigma_pushout",
          [](const BasedADC& a) { return report_to_dict(verify_sigma_pushout(share(a))); });
    m.def("verify_gray_cylinder",
          [](const BasedADC& a) { return report_to_dict(verify_gray_cylinder(share(a))); });
    m.def("verify_dual_monoidal", [](const BasedADC& a, const BasedADC& b) {
        return report_to_dict(verify_dual_monoidal(share(a), share(b)));
    });
    m.def("verify_nerve_globe", [](int q) { return report_to_dict(verify_nerve_globe(q)); });

    py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "CoefficientOverflowError", PyExc_OverflowError);
}
