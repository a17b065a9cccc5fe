#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencase/convergence.hpp"
#include "gencase/definition_check.hpp"
#include "gencase/delta.hpp"
#include "gencase/density.hpp"
#include "gencase/reductions.hpp"

namespace gencase {
namespace report {

using json = nlohmann::ordered_json;

/// Exact values serialize as decimal strings (value_num / value_den) so
/// arbitrary-precision denominators survive; sampled values carry
/// value_float plus the interval. `value` is always present as a float
/// convenience for plotting.
json density_value_json(const strata::DensityValue& v);

json convergence_json(const strata::ConvergenceReport& r);

/// {set_label, mode, points: [...], classification: {...}} per the
/// profile schema; classification is null when absent.
json profile_json(const strata::DensityProfile& profile,
                  const std::optional<strata::ConvergenceReport>& classification);
std::string profile_csv(const strata::DensityProfile& profile);

json delta_json(const harness::DeltaEstimate& est);
json delta_table_json(const std::vector<harness::DeltaEstimate>& table);
std::string delta_table_csv(const std::vector<harness::DeltaEstimate>& table);

json ratio_json(const reductions::AchievementRatio& r);
json ratio_table_json(const std::vector<reductions::AchievementRatio>& table);
std::string ratio_table_csv(const std::vector<reductions::AchievementRatio>& table);

json check_json(const reductions::DefinitionCheckReport& r);
std::string check_csv(const reductions::DefinitionCheckReport& r);

/// Deterministic short decimal form used in CSV cells.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Aligns the per-radius values of two or more previously written reports
/// (profile or check JSON documents) on their common radii. Throws
/// ConfigError when fewer than two reports are given or their radius
/// ranges are disjoint.
struct ComparisonRow {
    uint32_t n = 0;
    std::vector<double> values;  // one per report, in argument order
    std::vector<double> deltas;  // value - first value
};

struct ComparisonResult {
    std::vector<std::string> sources;
    std::vector<std::string> labels;
    std::vector<ComparisonRow> rows;
};

ComparisonResult compare_reports(const std::vector<std::string>& paths);
json comparison_json(const ComparisonResult& cmp);
std::string comparison_csv(const ComparisonResult& cmp);

} // namespace report
} // namespace gencase
