#include "gencase/runner.hpp"

#include <cctype>
#include <filesystem>
#include <optional>
#include <sstream>

#include "gencase/candidates.hpp"
#include "gencase/definition_check.hpp"
#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"
#include "gencase/version.hpp"

namespace gencase {
namespace cli {

namespace {

namespace fs = std::filesystem;
using report::json;

std::string sanitize(const std::string& s) {
    std::string out;
    for (char ch : s) {
        out.push_back(std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
    }
    return out;
}

std::vector<uint32_t> radii_of(const ExperimentConfig& cfg) {
    if (cfg.n_min > cfg.n_max) throw ConfigError("config: empty n range (n_min > n_max)");
    return strata::radius_range(cfg.n_min, cfg.n_max, cfg.n_step);
}

void require_seed(const ExperimentConfig& cfg) {
    if (!cfg.has_seed) throw ConfigError("config: seed is mandatory (set seed= or pass --seed)");
}

json config_echo(const ExperimentConfig& cfg) {
    json j;
    if (!cfg.candidate.empty()) j["candidate"] = cfg.candidate;
    if (!cfg.inverter.empty()) j["inverter"] = cfg.inverter;
    if (!cfg.set.empty()) j["set"] = cfg.set;
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["n_step"] = cfg.n_step;
    j["c"] = cfg.c;
    j["p_degree"] = cfg.p_degree;
    j["trials"] = cfg.trials;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["mode"] = strata::mode_name(cfg.mode);
    j["fuel"] = cfg.fuel.describe();
    j["confidence"] = cfg.confidence;
    j["sphere_cap"] = cfg.sphere_cap;
    j["tape_cap"] = cfg.tape_cap;
    return j;
}

json envelope(const std::string& verb, const ExperimentConfig& cfg, json results) {
    json j;
    j["tool"] = "gencase";
    j["version"] = kVersion;
    j["verb"] = verb;
    j["config"] = config_echo(cfg);
    j["results"] = std::move(results);
    return j;
}

RunPaths write_reports(const std::string& out_dir, const std::string& stem, const json& doc,
                       const std::string& csv, std::string summary) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    RunPaths paths;
    paths.json_path = (fs::path(out_dir) / (stem + ".json")).string();
    paths.csv_path = (fs::path(out_dir) / (stem + ".csv")).string();
    report::write_text_file(paths.json_path, doc.dump(2) + "\n");
    report::write_text_file(paths.csv_path, csv);
    paths.summary = std::move(summary);
    return paths;
}

harness::SuccessSetParams success_params(const ExperimentConfig& cfg) {
    harness::SuccessSetParams p;
    p.mode = cfg.mode;
    p.fuel = cfg.fuel;
    p.trials = cfg.trials;
    p.seed = cfg.seed;
    p.tape_cap = cfg.tape_cap;
    p.confidence = cfg.confidence;
    return p;
}

strata::DensityValue measure_density(const strata::InputSet& set, uint32_t n,
                                     const ExperimentConfig& cfg) {
    if (cfg.mode == strata::Mode::exact) return strata::exact_density(set, n, cfg.sphere_cap);
    return strata::mc_density(set, n, cfg.samples, cfg.seed, cfg.confidence);
}

RunPaths run_density(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.set.empty()) throw ConfigError("density: config needs set= (a reference set name)");
    const strata::InputSet set = strata::reference_set(cfg.set);
    const auto radii = radii_of(cfg);
    strata::SamplingParams sp{cfg.samples, cfg.seed, cfg.confidence};
    const strata::DensityProfile profile =
        strata::density_profile(set, radii, cfg.mode, sp, cfg.sphere_cap);
    std::optional<strata::ConvergenceReport> cls;
    if (profile.points.size() >= 4) cls = strata::classify_convergence(profile);

    std::ostringstream summary;
    summary << "density of '" << cfg.set << "' over n=" << cfg.n_min << ".." << cfg.n_max;
    if (cls) summary << "  class=" << strata::convergence_class_name(cls->klass);

    const std::string stem =
        "density_" + sanitize(cfg.label.empty() ? cfg.set : cfg.label);
    return write_reports(out_dir, stem, envelope("density", cfg, report::profile_json(profile, cls)),
                         report::profile_csv(profile), summary.str());
}

RunPaths run_delta(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.candidate.empty() || cfg.inverter.empty())
        throw ConfigError("delta: config needs candidate= and inverter=");
    const auto f = candidates::candidate_by_name(cfg.candidate);
    const auto a = candidates::inverter_by_name(cfg.inverter, f);
    std::vector<harness::DeltaEstimate> table;
    for (uint32_t n : radii_of(cfg)) {
        if (!f.in_domain(n)) throw DomainError(f.name() + ": n=" + std::to_string(n) +
                                               " outside candidate domain");
        const uint64_t fuel = cfg.fuel.fuel_for(n);
        if (cfg.mode == strata::Mode::exact) {
            if (n > cfg.sphere_cap) {
                throw CapExceededError("sphere too large for exact mode: n=" + std::to_string(n));
            }
            for (uint64_t xi = 0; xi < (uint64_t{1} << n); ++xi) {
                table.push_back(harness::exact_delta(a, f, BitString::from_index(xi, n), fuel,
                                                     cfg.tape_cap));
            }
        } else {
            const uint64_t stream = cfg.seed ^ rng::mix64(uint64_t{n} * rng::kC2);
            for (uint64_t i = 0; i < cfg.samples; ++i) {
                const BitString x = rng::bits(stream, rng::kDomainPerInput, i, n);
                table.push_back(
                    harness::estimate_delta(a, f, x, cfg.trials, fuel, cfg.seed, cfg.confidence));
            }
        }
    }
    json results;
    results["candidate"] = f.name();
    results["inverter"] = a.name();
    results["rows"] = report::delta_table_json(table);

    std::ostringstream summary;
    summary << "delta table: " << table.size() << " inputs, " << a.name() << " vs " << f.name();
    const std::string stem = "delta_" + sanitize(cfg.label.empty() ? cfg.candidate + "_" + cfg.inverter
                                                                   : cfg.label);
    return write_reports(out_dir, stem, envelope("delta", cfg, std::move(results)),
                         report::delta_table_csv(table), summary.str());
}

RunPaths run_check(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.candidate.empty() || cfg.inverter.empty())
        throw ConfigError("check: config needs candidate= and inverter=");
    const auto f = candidates::candidate_by_name(cfg.candidate);
    const auto a = candidates::inverter_by_name(cfg.inverter, f);
    reductions::DefinitionCheckParams params;
    params.c = cfg.c;
    params.p_degree = cfg.p_degree;
    params.mode = cfg.mode;
    params.fuel = cfg.fuel;
    params.trials = cfg.trials;
    params.density_samples = cfg.samples;
    params.seed = cfg.seed;
    params.sphere_cap = cfg.sphere_cap;
    params.tape_cap = cfg.tape_cap;
    params.confidence = cfg.confidence;
    const auto rep = reductions::definition_check(a, f, radii_of(cfg), params);

    std::ostringstream summary;
    summary << "check " << a.name() << " vs " << f.name() << ": strong_ppt "
            << (rep.strong_ppt_violated ? "VIOLATED" : "consistent") << ", strong_partial "
            << (rep.strong_partial_violated ? "VIOLATED" : "consistent");
    if (rep.has_classification) {
        summary << ", success profile "
                << strata::convergence_class_name(rep.success_profile.klass);
    }
    const std::string stem = "check_" + sanitize(cfg.label.empty() ? cfg.candidate + "_" + cfg.inverter
                                                                   : cfg.label);
    return write_reports(out_dir, stem, envelope("check", cfg, report::check_json(rep)),
                         report::check_csv(rep), summary.str());
}

RunPaths run_amplify(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.candidate.empty() || cfg.inverter.empty())
        throw ConfigError("amplify: config needs candidate= and inverter=");
    const auto f = candidates::candidate_by_name(cfg.candidate);
    const auto base = candidates::inverter_by_name(cfg.inverter, f);
    const auto boosted = reductions::amplify(base, f, cfg.c);
    const auto base_set = harness::success_set(base, f, cfg.c, success_params(cfg));
    const auto boosted_set = harness::success_set(boosted, f, cfg.c, success_params(cfg));

    json rows = json::array();
    std::ostringstream csv;
    csv << "n,plan_k,plan_epsilon,base_density,amplified_density\n";
    for (uint32_t n : radii_of(cfg)) {
        const auto plan = reductions::chernoff_plan(n, cfg.c);
        const auto base_density = measure_density(base_set, n, cfg);
        const auto amp_density = measure_density(boosted_set, n, cfg);
        rows.push_back({{"n", n},
                        {"plan", {{"k", plan.repetitions}, {"epsilon", plan.epsilon}}},
                        {"base_density", report::density_value_json(base_density)},
                        {"amplified_density", report::density_value_json(amp_density)}});
        csv << n << ',' << plan.repetitions << ',' << report::format_double(plan.epsilon) << ','
            << report::format_double(base_density.value) << ','
            << report::format_double(amp_density.value) << '\n';
    }
    json results;
    results["candidate"] = f.name();
    results["inverter"] = base.name();
    results["amplified"] = boosted.name();
    results["rows"] = std::move(rows);

    std::ostringstream summary;
    summary << "amplify " << base.name() << " vs " << f.name() << " over n=" << cfg.n_min << ".."
            << cfg.n_max;
    const std::string stem =
        "amplify_" + sanitize(cfg.label.empty() ? cfg.candidate + "_" + cfg.inverter : cfg.label);
    return write_reports(out_dir, stem, envelope("amplify", cfg, std::move(results)), csv.str(),
                         summary.str());
}

RunPaths run_ratio(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.candidate.empty() || cfg.inverter.empty())
        throw ConfigError("ratio: config needs candidate= and inverter=");
    const auto f = candidates::candidate_by_name(cfg.candidate);
    const auto a = candidates::inverter_by_name(cfg.inverter, f);
    std::vector<reductions::AchievementRatio> table;
    for (uint32_t n : radii_of(cfg)) {
        if (!f.in_domain(n)) throw DomainError(f.name() + ": n=" + std::to_string(n) +
                                               " outside candidate domain");
        reductions::RatioParams params;
        params.mode = cfg.mode;
        params.fuel = cfg.fuel.fuel_for(n);
        params.trials = cfg.trials;
        params.seed = cfg.seed;
        params.tape_cap = cfg.tape_cap;
        params.confidence = cfg.confidence;
        if (cfg.mode == strata::Mode::exact) {
            if (n > cfg.sphere_cap) {
                throw CapExceededError("sphere too large for exact mode: n=" + std::to_string(n));
            }
            for (uint64_t xi = 0; xi < (uint64_t{1} << n); ++xi) {
                table.push_back(
                    reductions::achievement_ratio(a, f, BitString::from_index(xi, n), params));
            }
        } else {
            const uint64_t stream = cfg.seed ^ rng::mix64(uint64_t{n} * rng::kC2);
            for (uint64_t i = 0; i < cfg.samples; ++i) {
                const BitString x = rng::bits(stream, rng::kDomainPerInput, i, n);
                table.push_back(reductions::achievement_ratio(a, f, x, params));
            }
        }
    }
    json results;
    results["candidate"] = f.name();
    results["inverter"] = a.name();
    results["rows"] = report::ratio_table_json(table);

    std::ostringstream summary;
    uint64_t infinite = 0;
    for (const auto& r : table) infinite += r.is_infinite ? 1 : 0;
    summary << "ratio table: " << table.size() << " inputs, " << infinite << " infinite";
    const std::string stem =
        "ratio_" + sanitize(cfg.label.empty() ? cfg.candidate + "_" + cfg.inverter : cfg.label);
    return write_reports(out_dir, stem, envelope("ratio", cfg, std::move(results)),
                         report::ratio_table_csv(table), summary.str());
}

} // namespace

RunPaths run_experiment(const std::string& verb, const ExperimentConfig& cfg,
                        const std::string& out_dir) {
    require_seed(cfg);
    set_thread_count(cfg.threads);
    if (verb == "density") return run_density(cfg, out_dir);
    if (verb == "delta") return run_delta(cfg, out_dir);
    if (verb == "check") return run_check(cfg, out_dir);
    if (verb == "amplify") return run_amplify(cfg, out_dir);
    if (verb == "ratio") return run_ratio(cfg, out_dir);
    throw ConfigError("unknown experiment verb: " + verb);
}

RunPaths run_compare(const std::vector<std::string>& report_paths, const std::string& out_dir) {
    const auto cmp = report::compare_reports(report_paths);
    json doc;
    doc["tool"] = "gencase";
    doc["version"] = kVersion;
    doc["verb"] = "compare";
    doc["results"] = report::comparison_json(cmp);

    std::ostringstream summary;
    summary << "compared " << report_paths.size() << " reports over " << cmp.rows.size()
            << " common radii";
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    RunPaths paths;
    paths.json_path = (std::filesystem::path(out_dir) / "compare.json").string();
    paths.csv_path = (std::filesystem::path(out_dir) / "compare.csv").string();
    report::write_text_file(paths.json_path, doc.dump(2) + "\n");
    report::write_text_file(paths.csv_path, report::comparison_csv(cmp));
    paths.summary = summary.str();
    return paths;
}

} // namespace cli
} // namespace gencase
