#include "safsim/saf/split-harness.hpp"

#include <doctest.h>

#include <cmath>

using namespace safsim;
using namespace safsim::saf;

namespace {

ProbabilityColumn
randomColumn(Rng& rng, std::size_t faces, bool allPositive)
{
  std::vector<std::pair<FaceId, double>> entries;
  double sum = 0.0;
  for (std::size_t i = 0; i < faces; ++i) {
    double w = rng.uniform01();
    if (!allPositive && rng.uniform01() < 0.25) {
      w = 0.0;
    }
    if (allPositive) {
      w += 0.01;
    }
    entries.emplace_back(static_cast<FaceId>(i), w);
    sum += w;
  }
  double drop = allPositive || rng.uniform01() < 0.5 ? 0.0 : rng.uniform01();
  sum += drop;
  if (sum == 0.0) {
    return ProbabilityColumn(entries, 1.0);
  }
  for (auto& e : entries) {
    e.second /= sum;
  }
  return ProbabilityColumn(entries, drop / sum);
}

void
randomTraffic(Rng& rng, PeriodStats& stats, const ProbabilityColumn& column)
{
  for (auto f : column.faces()) {
    stats.registerFace(f);
    if (rng.uniform01() < 0.8) {
      stats.addSatisfied(f, static_cast<double>(rng.uniformIndex(30)));
    }
    if (rng.uniform01() < 0.5) {
      stats.addUnsatisfied(f, static_cast<double>(rng.uniformIndex(30)));
    }
  }
  if (rng.uniform01() < 0.3) {
    stats.addDropped(static_cast<double>(rng.uniformIndex(10)));
  }
}

} // namespace

TEST_SUITE("update properties") {

TEST_CASE("columns stay stochastic under fuzzed updates")
{
  Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    SafParams params;
    params.sigmaMode = rng.uniform01() < 0.5 ? SigmaMode::Floor : SigmaMode::Real;
    if (rng.uniform01() < 0.3) {
      params.alphaOverride = 0.05 + 0.95 * rng.uniform01();
    }
    auto column = randomColumn(rng, 1 + rng.uniformIndex(5), false);
    PeriodStats stats(params.windowN);
    double t = params.tMin + (params.tMax - params.tMin) * rng.uniform01();
    for (int period = 0; period < 5; ++period) {
      randomTraffic(rng, stats, column);
      auto report = applyPeriodUpdate(column, t, stats, params);
      REQUIRE(std::abs(column.sum() - 1.0) <= 1e-9);
      REQUIRE(column.drop() >= 0.0);
      for (auto f : column.faces()) {
        REQUIRE(column.get(f) >= 0.0);
      }
      REQUIRE(t >= params.tMin - 1e-12);
      REQUIRE(t <= params.tMax + 1e-12);
      if (report.branch == UpdateBranch::Shift) {
        REQUIRE(std::abs(report.massRemoved - report.massAdded) <= 1e-12);
      }
    }
  }
}

TEST_CASE("partitions are disjoint covers")
{
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    auto column = randomColumn(rng, 1 + rng.uniformIndex(6), false);
    PeriodStats stats;
    randomTraffic(rng, stats, column);
    auto part = partitionFaces(stats, column.faces(), 0.25 + 0.7 * rng.uniform01());

    auto merged = part.reliable;
    merged.insert(merged.end(), part.unreliable.begin(), part.unreliable.end());
    std::sort(merged.begin(), merged.end());
    REQUIRE(merged == column.faces());

    auto reliable = part.satisfying;
    reliable.insert(reliable.end(), part.probing.begin(), part.probing.end());
    std::sort(reliable.begin(), reliable.end());
    REQUIRE(reliable == part.reliable);
  }
}

TEST_CASE("unsatisfied share is positive exactly when some face is unreliable")
{
  Rng rng(77);
  SafParams params;
  for (int trial = 0; trial < 2000; ++trial) {
    auto column = randomColumn(rng, 1 + rng.uniformIndex(5), true);
    PeriodStats stats;
    randomTraffic(rng, stats, column);
    stats.addSatisfied(column.faces().front(), 1);
    double t = params.tMin + (params.tMax - params.tMin) * rng.uniform01();
    auto report = applyPeriodUpdate(column, t, stats, params);
    REQUIRE((report.delta > 0.0) == !report.partition.unreliable.empty());
  }
}

TEST_CASE("periods to reliability never exceed the convergence bound")
{
  Rng rng(31337);
  int checked = 0;
  while (checked < 200) {
    double demand = 50.0 + 950.0 * rng.uniform01();
    double t = 0.3 + 0.6 * rng.uniform01();
    double alpha = 0.05 + 0.95 * rng.uniform01();
    double p0 = 0.1 + 0.85 * rng.uniform01();
    double capacity = demand * p0 * t * rng.uniform01();
    if (capacity <= 0.0 || p0 * demand < capacity / t) {
      continue;
    }

    SafParams params;
    params.alphaOverride = alpha;
    params.tMin = std::min(params.tMin, t / 2);
    SplitHarness harness(ProbabilityColumn({{0, p0}, {1, 1.0 - p0}}, 0.0), t, params, demand);
    harness.setCapacity(0, capacity);
    harness.freezeThreshold(true);

    std::vector<UnreliableFaceLoad> load{{p0, capacity}};
    int bound = convergenceBound(load, demand, t, alpha);

    int unreliablePeriods = 0;
    for (int period = 0; period < bound + 50; ++period) {
      auto report = harness.step();
      if (report.partition.unreliable.empty()) {
        break;
      }
      ++unreliablePeriods;
    }
    INFO("p0=" << p0 << " d=" << capacity << " I=" << demand << " t=" << t << " alpha=" << alpha);
    REQUIRE(unreliablePeriods <= bound);
    ++checked;
  }
}

TEST_CASE("fixed point recovers from a perturbation")
{
  SafParams params;
  params.alphaOverride = 1.0;
  SplitHarness harness(ProbabilityColumn({{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}}, 0.0), 0.5, params, 189.0);
  harness.setCapacity(0, 0.0);
  harness.setCapacity(1, 63.0);
  harness.setCapacity(2, 126.0);
  for (int i = 0; i < 30; ++i) {
    harness.step();
  }
  auto near = [&] {
    const auto& c = harness.column();
    return std::abs(c.get(1) - 1.0 / 3) < 1e-3 && std::abs(c.get(2) - 2.0 / 3) < 1e-3;
  };
  REQUIRE(near());

  auto c = harness.column();
  c.set(1, c.get(1) + 0.2);
  c.set(2, c.get(2) - 0.2);
  harness.setColumn(c);

  bool recovered = false;
  for (int i = 0; i < 50 && !recovered; ++i) {
    harness.step();
    recovered = near();
  }
  CHECK(recovered);
}

}
