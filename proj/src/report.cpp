#include "gencase/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gencase/errors.hpp"

namespace gencase {
namespace report {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json density_value_json(const strata::DensityValue& v) {
    json j;
    j["n"] = v.n;
    j["mode"] = strata::mode_name(v.mode);
    if (v.mode == strata::Mode::exact) {
        j["value_num"] = v.exact.num_string();
        j["value_den"] = v.exact.den_string();
    } else {
        j["value_float"] = v.value;
        j["confidence"] = v.confidence;
    }
    j["value"] = v.value;
    j["half_width"] = v.half_width;
    j["samples"] = v.samples;
    return j;
}

json convergence_json(const strata::ConvergenceReport& r) {
    json j;
    j["class"] = strata::convergence_class_name(r.klass);
    j["rho"] = r.limit_estimate;
    j["d"] = r.fitted_exponent;
    j["residual"] = r.fit_residual;
    j["poly_rmse"] = r.poly_rmse;
    j["exp_rmse"] = r.exp_rmse;
    j["exp_rate"] = r.exp_rate;
    j["radii"] = r.radii;
    return j;
}

json profile_json(const strata::DensityProfile& profile,
                  const std::optional<strata::ConvergenceReport>& classification) {
    json j;
    j["set_label"] = profile.set_label;
    j["mode"] = profile.points.empty() ? "exact" : strata::mode_name(profile.points[0].mode);
    j["estimated_membership"] = profile.estimated_membership;
    j["points"] = json::array();
    for (const auto& p : profile.points) j["points"].push_back(density_value_json(p));
    j["classification"] = classification ? convergence_json(*classification) : json(nullptr);
    return j;
}

std::string profile_csv(const strata::DensityProfile& profile) {
    std::ostringstream out;
    out << "set_label,n,mode,value,value_num,value_den,half_width,confidence,samples\n";
    for (const auto& p : profile.points) {
        out << profile.set_label << ',' << p.n << ',' << strata::mode_name(p.mode) << ','
            << format_double(p.value) << ',';
        if (p.mode == strata::Mode::exact) {
            out << p.exact.num_string() << ',' << p.exact.den_string();
        } else {
            out << ',';
        }
        out << ',' << format_double(p.half_width) << ',' << format_double(p.confidence) << ','
            << p.samples << '\n';
    }
    return out.str();
}

json delta_json(const harness::DeltaEstimate& est) {
    json j;
    j["x"] = est.x.to_string();
    j["n"] = est.n;
    j["mode"] = strata::mode_name(est.mode);
    if (est.mode == strata::Mode::exact) {
        j["delta_num"] = est.exact.num_string();
        j["delta_den"] = est.exact.den_string();
    } else {
        j["half_width"] = est.half_width;
        j["confidence"] = est.confidence;
    }
    j["delta"] = est.delta;
    j["trials"] = est.trials;
    j["fuel"] = est.fuel;
    j["mean_steps"] = est.mean_steps;
    j["max_halting_steps"] = est.max_halting_steps;
    j["saw_halting"] = est.saw_halting;
    j["outcomes"] = {{"success", est.counts.success},
                     {"wrong_answer", est.counts.wrong_answer},
                     {"fuel_exhausted", est.counts.fuel_exhausted},
                     {"tape_exhausted", est.counts.tape_exhausted}};
    return j;
}

json delta_table_json(const std::vector<harness::DeltaEstimate>& table) {
    json rows = json::array();
    for (const auto& est : table) rows.push_back(delta_json(est));
    return rows;
}

std::string delta_table_csv(const std::vector<harness::DeltaEstimate>& table) {
    std::ostringstream out;
    out << "x,n,mode,delta,delta_num,delta_den,half_width,trials,mean_steps,"
           "outcome_success,outcome_wrong_answer,outcome_fuel_exhausted,outcome_tape_exhausted\n";
    for (const auto& est : table) {
        out << est.x.to_string() << ',' << est.n << ',' << strata::mode_name(est.mode) << ','
            << format_double(est.delta) << ',';
        if (est.mode == strata::Mode::exact) {
            out << est.exact.num_string() << ',' << est.exact.den_string();
        } else {
            out << ',';
        }
        out << ',' << format_double(est.half_width) << ',' << est.trials << ','
            << format_double(est.mean_steps) << ',' << est.counts.success << ','
            << est.counts.wrong_answer << ',' << est.counts.fuel_exhausted << ','
            << est.counts.tape_exhausted << '\n';
    }
    return out.str();
}

json ratio_json(const reductions::AchievementRatio& r) {
    json j;
    j["x"] = r.delta.x.to_string();
    j["n"] = r.delta.n;
    j["mode"] = strata::mode_name(r.delta.mode);
    j["max_halting_steps"] = r.delta.max_halting_steps;
    j["mean_steps"] = r.delta.mean_steps;
    j["delta"] = r.delta.delta;
    j["ratio"] = r.is_infinite ? json(nullptr) : json(r.ratio);
    j["is_infinite"] = r.is_infinite;
    j["no_halting_run"] = r.no_halting_run;
    return j;
}

json ratio_table_json(const std::vector<reductions::AchievementRatio>& table) {
    json rows = json::array();
    for (const auto& r : table) rows.push_back(ratio_json(r));
    return rows;
}

std::string ratio_table_csv(const std::vector<reductions::AchievementRatio>& table) {
    std::ostringstream out;
    out << "x,n,mode,max_halting_steps,mean_steps,delta,ratio,is_infinite,no_halting_run\n";
    for (const auto& r : table) {
        out << r.delta.x.to_string() << ',' << r.delta.n << ','
            << strata::mode_name(r.delta.mode) << ',' << r.delta.max_halting_steps << ','
            << format_double(r.delta.mean_steps) << ',' << format_double(r.delta.delta) << ',';
        if (r.is_infinite) {
            out << "inf";
        } else {
            out << format_double(r.ratio);
        }
        out << ',' << (r.is_infinite ? 1 : 0) << ',' << (r.no_halting_run ? 1 : 0) << '\n';
    }
    return out.str();
}

json check_json(const reductions::DefinitionCheckReport& r) {
    json j;
    j["candidate"] = r.candidate;
    j["inverter"] = r.inverter;
    j["c"] = r.params.c;
    j["p_degree"] = r.params.p_degree;
    j["mode"] = strata::mode_name(r.params.mode);
    j["fuel"] = r.params.fuel.describe();
    j["spheres"] = json::array();
    for (const auto& sc : r.spheres) {
        json s;
        s["n"] = sc.n;
        s["fuel"] = sc.fuel;
        s["plan"] = {{"k", sc.plan_repetitions}, {"epsilon", sc.plan_epsilon}};
        s["delta_threshold"] = sc.delta_threshold;
        s["density_threshold"] = sc.density_threshold;
        s["success_density"] = density_value_json(sc.success_density);
        s["low_delta_density"] = density_value_json(sc.low_delta_density);
        s["fast_ratio_density"] = density_value_json(sc.fast_ratio_density);
        s["slow_ratio_density"] = density_value_json(sc.slow_ratio_density);
        s["strong_ppt_violated"] = sc.strong_ppt_violated;
        s["weak_ppt_consistent"] = sc.weak_ppt_consistent;
        s["strong_partial_violated"] = sc.strong_partial_violated;
        s["weak_partial_consistent"] = sc.weak_partial_consistent;
        j["spheres"].push_back(std::move(s));
    }
    j["verdicts"] = {{"strong_ppt_violated", r.strong_ppt_violated},
                     {"strong_ppt_violations", r.strong_ppt_violations},
                     {"weak_ppt_consistent", r.weak_ppt_consistent},
                     {"strong_partial_violated", r.strong_partial_violated},
                     {"strong_partial_violations", r.strong_partial_violations},
                     {"weak_partial_consistent", r.weak_partial_consistent}};
    j["success_profile_classification"] =
        r.has_classification ? convergence_json(r.success_profile) : json(nullptr);
    return j;
}

std::string check_csv(const reductions::DefinitionCheckReport& r) {
    std::ostringstream out;
    out << "n,fuel,plan_k,plan_epsilon,delta_threshold,density_threshold,"
           "success_density,strong_ppt_violated,low_delta_density,weak_ppt_consistent,"
           "fast_ratio_density,strong_partial_violated,slow_ratio_density,weak_partial_"
           "consistent\n";
    for (const auto& sc : r.spheres) {
        out << sc.n << ',' << sc.fuel << ',' << sc.plan_repetitions << ','
            << format_double(sc.plan_epsilon) << ',' << format_double(sc.delta_threshold) << ','
            << format_double(sc.density_threshold) << ',' << format_double(sc.success_density.value)
            << ',' << (sc.strong_ppt_violated ? 1 : 0) << ','
            << format_double(sc.low_delta_density.value) << ',' << (sc.weak_ppt_consistent ? 1 : 0)
            << ',' << format_double(sc.fast_ratio_density.value) << ','
            << (sc.strong_partial_violated ? 1 : 0) << ','
            << format_double(sc.slow_ratio_density.value) << ','
            << (sc.weak_partial_consistent ? 1 : 0) << '\n';
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

/// Pulls (n -> value) pairs out of a written report: profile documents use
/// points[], check documents use spheres[].success_density.
std::vector<std::pair<uint32_t, double>> report_series(const json& doc, std::string& label) {
    std::vector<std::pair<uint32_t, double>> series;
    const json& body = doc.contains("results") ? doc["results"] : doc;
    if (body.contains("points")) {
        label = body.value("set_label", "profile");
        for (const auto& p : body["points"]) {
            series.emplace_back(p["n"].get<uint32_t>(), p["value"].get<double>());
        }
    } else if (body.contains("spheres")) {
        label = body.value("inverter", "check") + "/" + body.value("candidate", "");
        for (const auto& s : body["spheres"]) {
            series.emplace_back(s["n"].get<uint32_t>(),
                                s["success_density"]["value"].get<double>());
        }
    } else {
        throw ConfigError("report has neither profile points nor check spheres");
    }
    return series;
}

} // namespace

ComparisonResult compare_reports(const std::vector<std::string>& paths) {
    if (paths.size() < 2) throw ConfigError("compare needs at least two report paths");
    ComparisonResult cmp;
    cmp.sources = paths;
    std::vector<std::vector<std::pair<uint32_t, double>>> all;
    for (const auto& path : paths) {
        json doc;
        try {
            doc = json::parse(read_text_file(path));
        } catch (const json::exception& e) {
            throw ConfigError("bad report JSON in " + path + ": " + e.what());
        }
        std::string label;
        all.push_back(report_series(doc, label));
        cmp.labels.push_back(label);
    }
    for (const auto& [n, value] : all[0]) {
        ComparisonRow row;
        row.n = n;
        row.values.push_back(value);
        bool everywhere = true;
        for (size_t i = 1; i < all.size(); ++i) {
            bool found = false;
            for (const auto& [m, v] : all[i]) {
                if (m == n) {
                    row.values.push_back(v);
                    found = true;
                    break;
                }
            }
            if (!found) {
                everywhere = false;
                break;
            }
        }
        if (!everywhere) continue;
        for (double v : row.values) row.deltas.push_back(v - row.values[0]);
        cmp.rows.push_back(std::move(row));
    }
    if (cmp.rows.empty()) throw ConfigError("compare: reports have no common radii");
    return cmp;
}

json comparison_json(const ComparisonResult& cmp) {
    json j;
    j["sources"] = cmp.sources;
    j["labels"] = cmp.labels;
    j["rows"] = json::array();
    for (const auto& row : cmp.rows) {
        j["rows"].push_back({{"n", row.n}, {"values", row.values}, {"deltas", row.deltas}});
    }
    return j;
}

std::string comparison_csv(const ComparisonResult& cmp) {
    std::ostringstream out;
    out << "n";
    for (size_t i = 0; i < cmp.labels.size(); ++i) out << ",value_" << i;
    for (size_t i = 0; i < cmp.labels.size(); ++i) out << ",delta_" << i;
    out << '\n';
    for (const auto& row : cmp.rows) {
        out << row.n;
        for (double v : row.values) out << ',' << format_double(v);
        for (double d : row.deltas) out << ',' << format_double(d);
        out << '\n';
    }
    return out.str();
}

} // namespace report
} // namespace gencase
