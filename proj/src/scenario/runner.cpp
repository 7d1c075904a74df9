#include "safsim/scenario/runner.hpp"
#include "safsim/scenario/workload.hpp"
#include "safsim/sim/simulator.hpp"
#include "safsim/topology/generator.hpp"
#include "safsim/topology/topology-io.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace safsim::scenario {

namespace {

constexpr std::uint64_t kWorkloadStream = 1;
constexpr std::uint64_t kFailureStream = 2;

} // namespace

Summary
summarize(std::span<const double> values)
{
  Summary s;
  s.count = values.size();
  if (values.empty()) {
    return s;
  }
  double sum = 0.0;
  for (auto v : values) {
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) {
    return s;
  }
  double ss = 0.0;
  for (auto v : values) {
    ss += (v - s.mean) * (v - s.mean);
  }
  double n = static_cast<double>(values.size());
  double sd = std::sqrt(ss / (n - 1.0));
  boost::math::students_t dist(n - 1.0);
  s.halfWidth = boost::math::quantile(dist, 0.975) * sd / std::sqrt(n);
  return s;
}

const std::vector<std::string>&
metricNames()
{
  static const std::vector<std::string> names{
    "satisfaction_ratio", "cache_hit_ratio", "mean_hop_count",
    "drop_loop", "drop_queue", "drop_fd", "drop_link",
  };
  return names;
}

double
metricValue(const sim::RunMetrics& m, const std::string& name)
{
  if (name == "satisfaction_ratio") {
    return m.satisfactionRatio;
  }
  if (name == "cache_hit_ratio") {
    return m.cacheHitRatio;
  }
  if (name == "mean_hop_count") {
    return m.meanHopCount;
  }
  if (name == "drop_loop") {
    return static_cast<double>(m.dropLoop);
  }
  if (name == "drop_queue") {
    return static_cast<double>(m.dropQueue);
  }
  if (name == "drop_fd") {
    return static_cast<double>(m.dropFd);
  }
  if (name == "drop_link") {
    return static_cast<double>(m.dropLink);
  }
  throw std::invalid_argument("unknown metric " + name);
}

const Summary&
ScenarioReport::summary(const std::string& metric) const
{
  const auto& names = metricNames();
  auto it = std::find(names.begin(), names.end(), metric);
  if (it == names.end()) {
    throw std::invalid_argument("unknown metric " + metric);
  }
  return summaries.at(static_cast<std::size_t>(it - names.begin()));
}

std::size_t
defaultParallelism()
{
  if (const char* env = std::getenv("SAFSIM_PARALLEL")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) {
      return static_cast<std::size_t>(n);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunRecord
runOnce(const ScenarioConfig& config, std::uint32_t index)
{
  RunRecord record;
  record.run = index;
  record.seed = config.seed + index;
  record.topology = config.topologyFile ? topo::loadTopology(*config.topologyFile)
                                        : topo::generate(config.topologySpec(record.seed));

  sim::SimConfig sc;
  sc.strategy = config.strategy;
  sc.cacheCapacityBytes = config.cacheCapacityBytes;
  sc.payloadSize = config.payloadSize;
  sc.queueCapacity = config.queueCapacity;
  sc.interestLifetime = config.interestLifetime;
  sc.simTime = config.simTime;
  sc.alignPeriods = config.alignPeriods;
  sc.seed = record.seed;
  sc.clients = generateWorkload(config, record.topology, mixSeed(record.seed, kWorkloadStream));
  sc.failures = sim::drawFailures(record.topology, config.linkFailures, config.simTime,
                                  mixSeed(record.seed, kFailureStream));

  sim::Simulator simulator(record.topology, std::move(sc));
  record.metrics = simulator.run();
  return record;
}

ScenarioReport
runScenario(const ScenarioConfig& config, std::size_t workers)
{
  config.validate();
  const std::size_t runs = config.runs;
  if (workers == 0) {
    workers = defaultParallelism();
  }
  workers = std::min(workers, runs);

  std::vector<RunRecord> records(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < runs; i = next++) {
      try {
        records[i] = runOnce(config, static_cast<std::uint32_t>(i));
      }
      catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  }
  else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }

  for (std::size_t i = 0; i < runs; ++i) {
    if (!errors[i]) {
      continue;
    }
    try {
      std::rethrow_exception(errors[i]);
    }
    catch (const std::exception& e) {
      throw std::runtime_error("run " + std::to_string(i) + " (seed " + std::to_string(config.seed + i) +
                               ") failed: " + e.what());
    }
  }

  ScenarioReport report;
  report.runs = std::move(records);
  for (const auto& name : metricNames()) {
    std::vector<double> values;
    for (const auto& r : report.runs) {
      values.push_back(metricValue(r.metrics, name));
    }
    report.summaries.push_back(summarize(values));
  }
  return report;
}

} // namespace safsim::scenario
