#pragma once

#include <cstdint>
#include <string>

#include "gencase/delta.hpp"
#include "gencase/density.hpp"
#include "gencase/inverter.hpp"

namespace gencase {
namespace cli {

/// Flat key=value experiment description. '#' starts a comment; keys are
/// listed in the README. All randomness of a run flows from the single
/// `seed`, which is mandatory (the --seed flag can supply or override it).
struct ExperimentConfig {
    std::string candidate;
    std::string inverter;
    std::string set;  // reference set name, density verb only
    uint32_t n_min = 0;
    uint32_t n_max = 0;
    uint32_t n_step = 1;
    double c = 1.0;
    double p_degree = 2.0;
    uint64_t trials = 200;
    uint64_t samples = 200;
    bool has_seed = false;
    uint64_t seed = 0;
    strata::Mode mode = strata::Mode::exact;
    harness::FuelSchedule fuel = harness::FuelSchedule::poly(4.0, 3.0);
    double confidence = kDefaultConfidence;
    uint32_t sphere_cap = strata::kDefaultSphereCap;
    uint32_t tape_cap = harness::kDefaultTapeCap;
    unsigned threads = 1;
    std::string label;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

} // namespace cli
} // namespace gencase
