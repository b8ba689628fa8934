// Thin Python surface over the library. Structured results cross the
// boundary as JSON text and are decoded on the Python side, so the field
// names match the CLI's JSON output exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixorder/errors.hpp"
#include "mixorder/hfunctions.hpp"
#include "mixorder/io.hpp"
#include "mixorder/mixture.hpp"
#include "mixorder/orders.hpp"
#include "mixorder/theorems.hpp"

namespace py = pybind11;
using namespace mixorder;

namespace {

Scenario scenario_arg(const std::string& text) { return parse_scenario(text); }

std::string check_order_json(const std::string& scenario, const std::string& order) {
    const Scenario s = scenario_arg(scenario);
    return verdict_to_json(check_order(parse_order_kind(order), s.model_a(), s.model_b(), s.grid.build())).dump();
}

std::string check_theorem_json(const std::string& id, const std::string& scenario,
                               const std::vector<std::string>& waived) {
    return report_to_json(check_theorem(parse_theorem_id(id), scenario_arg(scenario), waived)).dump();
}

std::string search_json(const std::string& id, std::size_t trials, std::uint64_t seed, bool drop_balance) {
    SearchOptions options;
    if (drop_balance) options.waived.push_back(kBalanceHypothesis);
    const SearchOutcome out = search_counterexamples(parse_theorem_id(id), trials, seed, options);
    Json doc{{"trials", out.trials},
             {"accepted", out.accepted},
             {"skipped", out.skipped},
             {"inconclusive", out.inconclusive},
             {"findings", findings_to_json(out.findings)}};
    return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_mixorder, m) {
    m.doc() = "MPHR mixtures and stochastic-order checks";

    auto base = py::register_exception<Error>(m, "MixorderError", PyExc_RuntimeError);
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<TailError>(m, "TailError", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<InfiniteMeanSuspected>(m, "InfiniteMeanSuspected", base.ptr());

    py::class_<Baseline>(m, "Baseline")
        .def_static("exponential", &Baseline::exponential, py::arg("rate"))
        .def_static("power_burr", &Baseline::power_burr, py::arg("a"), py::arg("b"))
        .def_property_readonly("kind", [](const Baseline& b) { return to_string(b.kind()); })
        .def_property_readonly("params", &Baseline::params)
        .def("survival", &Baseline::survival)
        .def("density", &Baseline::density)
        .def("hazard", &Baseline::hazard)
        .def("inverse_survival", &Baseline::inverse_survival)
        .def("__repr__", &Baseline::describe);

    py::class_<MixtureModel>(m, "MixtureModel")
        .def_static(
            "vary_alpha",
            [](const Baseline& b, double lambda, const std::vector<double>& p, const std::vector<double>& alpha) {
                return MixtureModel::vary_alpha(b, lambda, p, alpha);
            },
            py::arg("baseline"), py::arg("lam"), py::arg("weights"), py::arg("alphas"))
        .def_static(
            "vary_lambda",
            [](const Baseline& b, double alpha, const std::vector<double>& p, const std::vector<double>& lambda) {
                return MixtureModel::vary_lambda(b, alpha, p, lambda);
            },
            py::arg("baseline"), py::arg("alpha"), py::arg("weights"), py::arg("lambdas"))
        .def_property_readonly("variant", [](const MixtureModel& mm) { return to_string(mm.variant()); })
        .def_property_readonly("weights", &MixtureModel::weights)
        .def_property_readonly("varying", &MixtureModel::varying)
        .def_property_readonly("common", &MixtureModel::common)
        .def("survival", &MixtureModel::survival)
        .def("cdf", &MixtureModel::cdf)
        .def("density", &MixtureModel::density)
        .def("hazard", &MixtureModel::hazard)
        .def("quantile", &MixtureModel::quantile)
        .def("sample", &MixtureModel::sample, py::arg("n"), py::arg("seed"));

    m.def("h_pa", &h_pa, py::arg("p"), py::arg("alpha"), py::arg("lam"), py::arg("baseline"), py::arg("x"));
    m.def("h_plambda", &h_plambda, py::arg("p"), py::arg("lam"), py::arg("alpha"), py::arg("baseline"),
          py::arg("x"));
    m.def("h_hr", &h_hr, py::arg("p"), py::arg("alpha"), py::arg("lam"), py::arg("baseline"), py::arg("x"));

    m.def("_normalize_scenario", [](const std::string& text) { return scenario_to_json(parse_scenario(text)).dump(); });
    m.def("_check_order", &check_order_json);
    m.def("_check_theorem", &check_theorem_json);
    m.def("_verify_example", [](int k) { return report_to_json(verify_paper_example(k)).dump(); });
    m.def("_search", &search_json);
}
