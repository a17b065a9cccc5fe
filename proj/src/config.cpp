#include "gencase/config.hpp"

#include <sstream>

#include "gencase/errors.hpp"
#include "gencase/report.hpp"

namespace gencase {
namespace cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

uint64_t parse_u64(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const uint64_t r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + v);
    }
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + v);
    }
}

} // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    bool fuel_poly_touched = false;
    double fuel_coeff = cfg.fuel.coeff;
    double fuel_degree = cfg.fuel.degree;
    uint64_t fuel_offset = cfg.fuel.offset;

    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        }

        if (key == "candidate") {
            cfg.candidate = value;
        } else if (key == "inverter") {
            cfg.inverter = value;
        } else if (key == "set") {
            cfg.set = value;
        } else if (key == "n_min") {
            cfg.n_min = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "n_max") {
            cfg.n_max = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "n_step") {
            cfg.n_step = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "c") {
            cfg.c = parse_double(value, key);
        } else if (key == "p_degree") {
            cfg.p_degree = parse_double(value, key);
        } else if (key == "trials") {
            cfg.trials = parse_u64(value, key);
        } else if (key == "samples") {
            cfg.samples = parse_u64(value, key);
        } else if (key == "seed") {
            cfg.seed = parse_u64(value, key);
            cfg.has_seed = true;
        } else if (key == "mode") {
            if (value == "exact") {
                cfg.mode = strata::Mode::exact;
            } else if (value == "sampled") {
                cfg.mode = strata::Mode::sampled;
            } else {
                throw ConfigError("config: mode must be exact or sampled, got " + value);
            }
        } else if (key == "fuel") {
            cfg.fuel = harness::FuelSchedule::fixed(parse_u64(value, key));
        } else if (key == "fuel_coeff") {
            fuel_coeff = parse_double(value, key);
            fuel_poly_touched = true;
        } else if (key == "fuel_degree") {
            fuel_degree = parse_double(value, key);
            fuel_poly_touched = true;
        } else if (key == "fuel_offset") {
            fuel_offset = parse_u64(value, key);
            fuel_poly_touched = true;
        } else if (key == "confidence") {
            cfg.confidence = parse_double(value, key);
            if (cfg.confidence <= 0.0 || cfg.confidence >= 1.0) {
                throw ConfigError("config: confidence must lie in (0, 1)");
            }
        } else if (key == "sphere_cap") {
            cfg.sphere_cap = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "tape_cap") {
            cfg.tape_cap = static_cast<uint32_t>(parse_u64(value, key));
        } else if (key == "threads") {
            cfg.threads = static_cast<unsigned>(parse_u64(value, key));
        } else if (key == "label") {
            cfg.label = value;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    if (fuel_poly_touched) {
        if (cfg.fuel.kind == harness::FuelSchedule::Kind::absolute) {
            throw ConfigError("config: give either fuel or fuel_coeff/fuel_degree, not both");
        }
        cfg.fuel = harness::FuelSchedule::poly(fuel_coeff, fuel_degree, fuel_offset);
    }
    if (cfg.n_step == 0) throw ConfigError("config: n_step must be positive");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    return parse_config_text(report::read_text_file(path));
}

} // namespace cli
} // namespace gencase
