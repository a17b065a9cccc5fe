#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gencase/bigint.hpp"
#include "gencase/candidates.hpp"
#include "gencase/convergence.hpp"
#include "gencase/definition_check.hpp"
#include "gencase/delta.hpp"
#include "gencase/density.hpp"
#include "gencase/errors.hpp"
#include "gencase/input_set.hpp"
#include "gencase/parallel.hpp"
#include "gencase/reductions.hpp"
#include "gencase/report.hpp"
#include "gencase/version.hpp"

namespace py = pybind11;
using namespace gencase;

namespace {

strata::Mode parse_mode(const std::string& mode) {
    if (mode == "exact") return strata::Mode::exact;
    if (mode == "sampled") return strata::Mode::sampled;
    throw py::value_error("mode must be 'exact' or 'sampled', got '" + mode + "'");
}

strata::LimitTarget parse_target(const std::string& target) {
    if (target == "zero" || target == "0") return strata::LimitTarget::zero;
    if (target == "one" || target == "1") return strata::LimitTarget::one;
    if (target == "auto") return strata::LimitTarget::automatic;
    throw py::value_error("target must be 'zero', 'one' or 'auto'");
}

strata::DensityProfile profile_from_pairs(const std::string& label,
                                          const std::vector<std::pair<uint32_t, double>>& points) {
    strata::DensityProfile profile;
    profile.set_label = label;
    for (const auto& [n, value] : points) {
        strata::DensityValue v;
        v.n = n;
        v.mode = strata::Mode::sampled;
        v.value = value;
        profile.points.push_back(v);
    }
    return profile;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generic-case analysis workbench: spherical densities, metered "
              "inversion experiments, and amplification/clipping reductions.";
    m.attr("__version__") = kVersion;

    py::register_exception<CapExceededError>(m, "CapExceededError");
    py::register_exception<ConfigError>(m, "RegistryError");
    py::register_exception<DomainError>(m, "DomainError");

    m.def("set_thread_count", &set_thread_count, py::arg("n"),
          "Worker threads for enumeration loops; results are schedule-independent.");
    m.def("sphere_size_str", [](uint32_t n) { return sphere_size(n).to_string(); }, py::arg("n"),
          "Decimal cardinality of the sphere of radius n (2^n).");

    py::class_<strata::DensityValue>(m, "DensityValue")
        .def_readonly("n", &strata::DensityValue::n)
        .def_property_readonly(
            "mode", [](const strata::DensityValue& v) { return strata::mode_name(v.mode); })
        .def_readonly("value", &strata::DensityValue::value)
        .def_property_readonly("value_num",
                               [](const strata::DensityValue& v) { return v.exact.num_string(); })
        .def_property_readonly("value_den",
                               [](const strata::DensityValue& v) { return v.exact.den_string(); })
        .def_readonly("half_width", &strata::DensityValue::half_width)
        .def_readonly("confidence", &strata::DensityValue::confidence)
        .def_readonly("samples", &strata::DensityValue::samples)
        .def("__repr__", [](const strata::DensityValue& v) {
            return "DensityValue(n=" + std::to_string(v.n) + ", value=" + std::to_string(v.value) +
                   ")";
        });

    py::class_<strata::DensityProfile>(m, "DensityProfile")
        .def_readonly("set_label", &strata::DensityProfile::set_label)
        .def_readonly("points", &strata::DensityProfile::points);

    py::class_<strata::ConvergenceReport>(m, "ConvergenceReport")
        .def_property_readonly(
            "klass",
            [](const strata::ConvergenceReport& r) {
                return strata::convergence_class_name(r.klass);
            })
        .def_readonly("limit_estimate", &strata::ConvergenceReport::limit_estimate)
        .def_readonly("fitted_exponent", &strata::ConvergenceReport::fitted_exponent)
        .def_readonly("fit_residual", &strata::ConvergenceReport::fit_residual)
        .def_readonly("poly_rmse", &strata::ConvergenceReport::poly_rmse)
        .def_readonly("exp_rmse", &strata::ConvergenceReport::exp_rmse)
        .def_readonly("exp_rate", &strata::ConvergenceReport::exp_rate)
        .def_readonly("radii", &strata::ConvergenceReport::radii)
        .def("__repr__", [](const strata::ConvergenceReport& r) {
            return std::string("ConvergenceReport(") + strata::convergence_class_name(r.klass) +
                   ", rho=" + std::to_string(r.limit_estimate) + ")";
        });

    m.def("reference_set_names", &strata::reference_set_names);
    m.def(
        "exact_density",
        [](const std::string& set_name, uint32_t n, uint32_t sphere_cap) {
            return strata::exact_density(strata::reference_set(set_name), n, sphere_cap);
        },
        py::arg("set_name"), py::arg("n"), py::arg("sphere_cap") = strata::kDefaultSphereCap);
    m.def(
        "mc_density",
        [](const std::string& set_name, uint32_t n, uint64_t samples, uint64_t seed,
           double confidence) {
            return strata::mc_density(strata::reference_set(set_name), n, samples, seed,
                                      confidence);
        },
        py::arg("set_name"), py::arg("n"), py::arg("samples"), py::arg("seed"),
        py::arg("confidence") = kDefaultConfidence);
    m.def(
        "density_profile",
        [](const std::string& set_name, const std::vector<uint32_t>& radii,
           const std::string& mode, uint64_t samples, uint64_t seed, double confidence,
           uint32_t sphere_cap) {
            strata::SamplingParams params{samples, seed, confidence};
            return strata::density_profile(strata::reference_set(set_name), radii,
                                           parse_mode(mode), params, sphere_cap);
        },
        py::arg("set_name"), py::arg("radii"), py::arg("mode") = "exact",
        py::arg("samples") = 1000, py::arg("seed") = 0,
        py::arg("confidence") = kDefaultConfidence,
        py::arg("sphere_cap") = strata::kDefaultSphereCap);
    m.def(
        "classify_convergence",
        [](const strata::DensityProfile& profile, const std::string& target) {
            return strata::classify_convergence(profile, parse_target(target));
        },
        py::arg("profile"), py::arg("target") = "auto");
    m.def(
        "classify_points",
        [](const std::vector<std::pair<uint32_t, double>>& points, const std::string& target) {
            return strata::classify_convergence(profile_from_pairs("points", points),
                                                parse_target(target));
        },
        py::arg("points"), py::arg("target") = "auto",
        "Classify a profile given directly as (n, value) pairs.");

    py::class_<harness::CandidateFunction>(m, "Candidate")
        .def_property_readonly("name", &harness::CandidateFunction::name)
        .def("in_domain", &harness::CandidateFunction::in_domain, py::arg("n"))
        .def("output_length", &harness::CandidateFunction::output_length, py::arg("n"))
        .def("step_bound", &harness::CandidateFunction::step_bound, py::arg("n"))
        .def(
            "evaluate",
            [](const harness::CandidateFunction& f, const std::string& x) {
                const auto ev = harness::evaluate(f, BitString::parse(x));
                return py::make_tuple(ev.output.to_string(), ev.steps);
            },
            py::arg("x"), "Returns (f(x) as a bitstring, steps used).");

    py::class_<harness::InverterProgram>(m, "Inverter")
        .def_property_readonly("name", &harness::InverterProgram::name)
        .def_property_readonly("kind",
                               [](const harness::InverterProgram& a) {
                                   return harness::inverter_kind_name(a.kind());
                               })
        .def("tape_len", &harness::InverterProgram::tape_len, py::arg("n"))
        .def("step_bound", &harness::InverterProgram::step_bound, py::arg("n"));

    m.def("make_candidate", &candidates::candidate_by_name, py::arg("name"));
    m.def("make_inverter", &candidates::inverter_by_name, py::arg("name"), py::arg("candidate"));
    m.def("candidate_names", &candidates::candidate_names);
    m.def("inverter_names", &candidates::inverter_names);

    py::class_<harness::RunOutcome>(m, "RunOutcome")
        .def_property_readonly("status",
                               [](const harness::RunOutcome& o) {
                                   return harness::run_status_name(o.status);
                               })
        .def_property_readonly("preimage",
                               [](const harness::RunOutcome& o) -> py::object {
                                   if (!o.preimage) return py::none();
                                   return py::str(o.preimage->to_string());
                               })
        .def_readonly("steps_used", &harness::RunOutcome::steps_used)
        .def("__repr__", [](const harness::RunOutcome& o) {
            return std::string("RunOutcome(") + harness::run_status_name(o.status) +
                   ", steps=" + std::to_string(o.steps_used) + ")";
        });

    m.def(
        "run_inverter",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f,
           const std::string& y, uint32_t n, const std::string& tape, uint64_t fuel) {
            return harness::run_inverter(a, f, BitString::parse(y), n, BitString::parse(tape),
                                         fuel);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("y"), py::arg("n"), py::arg("tape"),
        py::arg("fuel"));

    py::class_<harness::DeltaEstimate>(m, "DeltaEstimate")
        .def_property_readonly("x",
                               [](const harness::DeltaEstimate& e) { return e.x.to_string(); })
        .def_readonly("n", &harness::DeltaEstimate::n)
        .def_property_readonly(
            "mode", [](const harness::DeltaEstimate& e) { return strata::mode_name(e.mode); })
        .def_readonly("delta", &harness::DeltaEstimate::delta)
        .def_property_readonly("delta_num",
                               [](const harness::DeltaEstimate& e) { return e.exact.num_string(); })
        .def_property_readonly("delta_den",
                               [](const harness::DeltaEstimate& e) { return e.exact.den_string(); })
        .def_readonly("half_width", &harness::DeltaEstimate::half_width)
        .def_readonly("trials", &harness::DeltaEstimate::trials)
        .def_readonly("fuel", &harness::DeltaEstimate::fuel)
        .def_readonly("mean_steps", &harness::DeltaEstimate::mean_steps)
        .def_readonly("max_halting_steps", &harness::DeltaEstimate::max_halting_steps)
        .def_readonly("saw_halting", &harness::DeltaEstimate::saw_halting)
        .def_property_readonly("outcomes",
                               [](const harness::DeltaEstimate& e) {
                                   py::dict d;
                                   d["success"] = e.counts.success;
                                   d["wrong_answer"] = e.counts.wrong_answer;
                                   d["fuel_exhausted"] = e.counts.fuel_exhausted;
                                   d["tape_exhausted"] = e.counts.tape_exhausted;
                                   return d;
                               })
        .def("__repr__", [](const harness::DeltaEstimate& e) {
            return "DeltaEstimate(x=" + e.x.to_string() + ", delta=" + std::to_string(e.delta) +
                   ")";
        });

    m.def(
        "exact_delta",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f,
           const std::string& x, uint64_t fuel, uint32_t tape_cap) {
            return harness::exact_delta(a, f, BitString::parse(x), fuel, tape_cap);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("x"), py::arg("fuel"),
        py::arg("tape_cap") = harness::kDefaultTapeCap);
    m.def(
        "estimate_delta",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f,
           const std::string& x, uint64_t trials, uint64_t fuel, uint64_t seed, double confidence) {
            return harness::estimate_delta(a, f, BitString::parse(x), trials, fuel, seed,
                                           confidence);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("x"), py::arg("trials"),
        py::arg("fuel"), py::arg("seed"), py::arg("confidence") = kDefaultConfidence);

    m.def(
        "success_profile",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f, double c,
           const std::vector<uint32_t>& radii, const std::string& mode, double fuel_coeff,
           double fuel_degree, uint64_t trials, uint64_t seed, uint64_t density_samples,
           uint32_t sphere_cap, uint32_t tape_cap) {
            harness::SuccessSetParams params;
            params.mode = parse_mode(mode);
            params.fuel = harness::FuelSchedule::poly(fuel_coeff, fuel_degree);
            params.trials = trials;
            params.seed = seed;
            params.tape_cap = tape_cap;
            const auto set = harness::success_set(a, f, c, params);
            strata::SamplingParams sp{density_samples, seed, kDefaultConfidence};
            return strata::density_profile(set, radii, parse_mode(mode), sp, sphere_cap);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("c"), py::arg("radii"),
        py::arg("mode") = "exact", py::arg("fuel_coeff") = 4.0, py::arg("fuel_degree") = 3.0,
        py::arg("trials") = 200, py::arg("seed") = 0, py::arg("density_samples") = 200,
        py::arg("sphere_cap") = strata::kDefaultSphereCap,
        py::arg("tape_cap") = harness::kDefaultTapeCap,
        "Density profile of the set of inputs whose measured delta exceeds n^-c.");

    py::class_<reductions::ChernoffPlan>(m, "ChernoffPlan")
        .def_readonly("n", &reductions::ChernoffPlan::n)
        .def_readonly("c", &reductions::ChernoffPlan::c)
        .def_readonly("repetitions", &reductions::ChernoffPlan::repetitions)
        .def_readonly("epsilon", &reductions::ChernoffPlan::epsilon)
        .def("__repr__", [](const reductions::ChernoffPlan& p) {
            return "ChernoffPlan(k=" + std::to_string(p.repetitions) +
                   ", epsilon=" + std::to_string(p.epsilon) + ")";
        });

    m.def("chernoff_plan", &reductions::chernoff_plan, py::arg("n"), py::arg("c"));
    m.def("amplified_success", &reductions::amplified_success, py::arg("delta"),
          py::arg("repetitions"));
    m.def("repetitions_to_clear", &reductions::repetitions_to_clear, py::arg("delta"),
          py::arg("target"));
    m.def("amplify", &reductions::amplify, py::arg("inverter"), py::arg("candidate"),
          py::arg("c"));
    m.def("amplify_repeat", &reductions::amplify_repeat, py::arg("inverter"),
          py::arg("candidate"), py::arg("repetitions"));
    m.def("clip", &reductions::clip, py::arg("inverter"), py::arg("c"));

    py::class_<reductions::AchievementRatio>(m, "AchievementRatio")
        .def_readonly("delta", &reductions::AchievementRatio::delta)
        .def_readonly("ratio", &reductions::AchievementRatio::ratio)
        .def_readonly("is_infinite", &reductions::AchievementRatio::is_infinite)
        .def_readonly("no_halting_run", &reductions::AchievementRatio::no_halting_run)
        .def("__repr__", [](const reductions::AchievementRatio& r) {
            return r.is_infinite ? std::string("AchievementRatio(inf)")
                                 : "AchievementRatio(" + std::to_string(r.ratio) + ")";
        });

    m.def(
        "achievement_ratio",
        [](const harness::InverterProgram& b, const harness::CandidateFunction& f,
           const std::string& x, const std::string& mode, uint64_t fuel, uint64_t trials,
           uint64_t seed, uint32_t tape_cap) {
            reductions::RatioParams params;
            params.mode = parse_mode(mode);
            params.fuel = fuel;
            params.trials = trials;
            params.seed = seed;
            params.tape_cap = tape_cap;
            return reductions::achievement_ratio(b, f, BitString::parse(x), params);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("x"), py::arg("mode") = "exact",
        py::arg("fuel") = 4096, py::arg("trials") = 200, py::arg("seed") = 0,
        py::arg("tape_cap") = harness::kDefaultTapeCap);

    m.def(
        "averaging_split",
        [](const std::vector<double>& values, double rho) {
            const auto split = reductions::averaging_split(values, rho);
            return py::make_tuple(split.count_above, split.fraction);
        },
        py::arg("values"), py::arg("rho"),
        "Returns (count of values > rho/2, their fraction); requires mean(values) >= rho.");

    py::class_<reductions::AggregateSuccess>(m, "AggregateSuccess")
        .def_readonly("n", &reductions::AggregateSuccess::n)
        .def_property_readonly(
            "mode",
            [](const reductions::AggregateSuccess& a) { return strata::mode_name(a.mode); })
        .def_readonly("value", &reductions::AggregateSuccess::value)
        .def_property_readonly("value_num",
                               [](const reductions::AggregateSuccess& a) {
                                   return a.exact.num_string();
                               })
        .def_property_readonly("value_den",
                               [](const reductions::AggregateSuccess& a) {
                                   return a.exact.den_string();
                               })
        .def_readonly("half_width", &reductions::AggregateSuccess::half_width)
        .def_readonly("trials", &reductions::AggregateSuccess::trials);

    m.def(
        "aggregate_success",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f, uint32_t n,
           const std::string& mode, uint64_t fuel, uint64_t trials, uint64_t seed,
           uint32_t sphere_cap, uint32_t tape_cap) {
            reductions::AggregateParams params;
            params.fuel = fuel;
            params.trials = trials;
            params.seed = seed;
            params.sphere_cap = sphere_cap;
            params.tape_cap = tape_cap;
            return reductions::aggregate_success(a, f, n, parse_mode(mode), params);
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("n"), py::arg("mode") = "exact",
        py::arg("fuel") = 4096, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("sphere_cap") = strata::kDefaultSphereCap,
        py::arg("tape_cap") = harness::kDefaultTapeCap);

    m.def(
        "definition_check_json",
        [](const harness::InverterProgram& a, const harness::CandidateFunction& f,
           const std::vector<uint32_t>& radii, double c, double p_degree, const std::string& mode,
           double fuel_coeff, double fuel_degree, uint64_t trials, uint64_t density_samples,
           uint64_t seed, uint32_t sphere_cap, uint32_t tape_cap) {
            reductions::DefinitionCheckParams params;
            params.c = c;
            params.p_degree = p_degree;
            params.mode = parse_mode(mode);
            params.fuel = harness::FuelSchedule::poly(fuel_coeff, fuel_degree);
            params.trials = trials;
            params.density_samples = density_samples;
            params.seed = seed;
            params.sphere_cap = sphere_cap;
            params.tape_cap = tape_cap;
            return report::check_json(reductions::definition_check(a, f, radii, params)).dump();
        },
        py::arg("inverter"), py::arg("candidate"), py::arg("radii"), py::arg("c") = 1.0,
        py::arg("p_degree") = 2.0, py::arg("mode") = "exact", py::arg("fuel_coeff") = 4.0,
        py::arg("fuel_degree") = 3.0, py::arg("trials") = 200, py::arg("density_samples") = 200,
        py::arg("seed") = 0, py::arg("sphere_cap") = strata::kDefaultSphereCap,
        py::arg("tape_cap") = harness::kDefaultTapeCap,
        "Full security sweep as a JSON document string.");
}
