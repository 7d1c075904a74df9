#ifndef SAFSIM_SCENARIO_RUNNER_HPP
#define SAFSIM_SCENARIO_RUNNER_HPP

#include "safsim/scenario/config.hpp"
#include "safsim/sim/metrics.hpp"
#include "safsim/topology/topology.hpp"

#include <span>
#include <string>
#include <vector>

namespace safsim::scenario {

/// Mean and 95% Student-t confidence half-width of a sample.
struct Summary
{
  double mean = 0.0;
  double halfWidth = 0.0;
  std::size_t count = 0;
};

/// Half-width is 0 for fewer than two values.
Summary
summarize(std::span<const double> values);

struct RunRecord
{
  std::uint32_t run = 0;
  std::uint64_t seed = 0;
  topo::Topology topology;
  sim::RunMetrics metrics;
};

/// Metric names in report order.
const std::vector<std::string>&
metricNames();

/// Value of a named per-run metric.
double
metricValue(const sim::RunMetrics& metrics, const std::string& name);

struct ScenarioReport
{
  std::vector<RunRecord> runs;
  /// one entry per metricNames() element, in that order
  std::vector<Summary> summaries;

  const Summary&
  summary(const std::string& metric) const;
};

/// Worker count from SAFSIM_PARALLEL, else the hardware concurrency.
std::size_t
defaultParallelism();

/** \brief Runs run \p index of a scenario on its own topology, workload and
 *  failure schedule, all derived from the run seed `seed + index`.
 */
RunRecord
runOnce(const ScenarioConfig& config, std::uint32_t index);

/** \brief Runs every run of a scenario on \p workers threads (0 picks the
 *  default) and aggregates in run order.
 *  \throw std::runtime_error naming the first failed run
 */
ScenarioReport
runScenario(const ScenarioConfig& config, std::size_t workers = 0);

} // namespace safsim::scenario

#endif // SAFSIM_SCENARIO_RUNNER_HPP
