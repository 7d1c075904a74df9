#ifndef SAFSIM_SCENARIO_REPORT_HPP
#define SAFSIM_SCENARIO_REPORT_HPP

#include "safsim/scenario/runner.hpp"

#include <filesystem>
#include <ostream>
#include <string_view>

namespace safsim::scenario {

enum class ReportFormat {
  Csv,
  /// JSON with the CSV content plus per-link and per-node counters
  Report,
};

/// \throw std::invalid_argument on unknown names
ReportFormat
parseReportFormat(std::string_view name);

/// One row per run and a final `mean` row.
void
writeCsv(std::ostream& out, const ScenarioReport& report);

void
writeJsonReport(std::ostream& out, const ScenarioReport& report);

void
writeReport(std::ostream& out, const ScenarioReport& report, ReportFormat format);

/// \throw std::runtime_error if the file cannot be written
void
saveReport(const std::filesystem::path& path, const ScenarioReport& report, ReportFormat format);

} // namespace safsim::scenario

#endif // SAFSIM_SCENARIO_REPORT_HPP
