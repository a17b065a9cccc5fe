#pragma once

#include <string>
#include <vector>

#include "gencase/config.hpp"
#include "gencase/report.hpp"

namespace gencase {
namespace cli {

struct RunPaths {
    std::string json_path;
    std::string csv_path;
    std::string summary;  // short human-readable lines for stdout
};

/// Executes one experiment verb against a parsed config and writes the
/// JSON + CSV reports under out_dir. All measurement happens before any
/// file is written, so a failing run leaves no partial report. The JSON
/// content is a pure function of (config, seed): no timestamps, no host
/// details, and thread count is deliberately not echoed.
/// Verbs: density, delta, check, amplify, ratio.
RunPaths run_experiment(const std::string& verb, const ExperimentConfig& config,
                        const std::string& out_dir);

/// Aligns previously written reports; writes compare.json/.csv.
RunPaths run_compare(const std::vector<std::string>& report_paths, const std::string& out_dir);

} // namespace cli
} // namespace gencase
