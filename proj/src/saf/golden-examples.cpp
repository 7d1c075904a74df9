#include "safsim/saf/golden-examples.hpp"

#include <cmath>
#include <sstream>

namespace safsim::saf {

namespace {

SafParams
replayParams()
{
  SafParams params;
  params.alphaOverride = 1.0;
  params.lambda = 0.25;
  params.sigmaMode = SigmaMode::Floor;
  return params;
}

bool
columnMatches(const ProbabilityColumn& column, double drop, std::vector<double> expected, double tol)
{
  if (std::abs(column.drop() - drop) > tol) {
    return false;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(column.get(static_cast<FaceId>(i)) - expected[i]) > tol) {
      return false;
    }
  }
  return true;
}

} // namespace

std::vector<ReplayedPeriod>
replayLinkFailureExample()
{
  SplitHarness harness(ProbabilityColumn({{0, 0.0}, {1, 1.0 / 3}, {2, 2.0 / 3}}, 0.0),
                       0.99, replayParams(), kReplayDemand);
  harness.setCapacity(2, 0.0);

  std::vector<ReplayedPeriod> periods;
  auto run = [&] {
    auto report = harness.step();
    periods.push_back({harness.column(), report});
  };

  run();
  harness.setThreshold(0.75);
  run();
  run();
  harness.setThreshold(0.85);
  harness.setCapacity(1, 63.0);
  run();
  return periods;
}

std::vector<ReplayedPeriod>
replayCapacityExample(int periods)
{
  SplitHarness harness(ProbabilityColumn({{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}}, 0.0),
                       0.5, replayParams(), kReplayDemand);
  harness.setCapacity(0, 0.0);
  harness.setCapacity(1, 63.0);
  harness.setCapacity(2, 126.0);

  std::vector<ReplayedPeriod> result;
  for (int i = 0; i < periods; ++i) {
    auto report = harness.step();
    result.push_back({harness.column(), report});
  }
  return result;
}

std::vector<GoldenCheck>
checkGoldenExamples()
{
  std::vector<GoldenCheck> checks;
  constexpr double tol = 1e-6;

  auto failure = replayLinkFailureExample();
  {
    GoldenCheck c{"link-failure period 1", false, failure[0].column.toString()};
    c.passed = columnMatches(failure[0].column, 2.0 / 9, {4.0 / 9, 1.0 / 3, 0.0}, tol);
    checks.push_back(c);
  }
  {
    const auto& r = failure[1].report;
    std::ostringstream os;
    os << failure[1].column.toString() << " sigma/I F0=" << r.sigmaShare.at(0) << " F1=" << r.sigmaShare.at(1);
    GoldenCheck c{"link-failure period 2", false, os.str()};
    c.passed = columnMatches(failure[1].column, 0.0, {4.0 / 7, 3.0 / 7, 0.0}, tol) &&
               std::abs(r.sigmaShare.at(0) - 0.148) < 1e-3 &&
               std::abs(r.sigmaShare.at(1) - 0.111) < 1e-3;
    checks.push_back(c);
  }
  {
    GoldenCheck c{"link-failure period 3", false, failure[2].column.toString()};
    c.passed = columnMatches(failure[2].column, 0.0, {4.0 / 7, 3.0 / 7, 0.0}, tol);
    checks.push_back(c);
  }
  {
    GoldenCheck c{"link-failure period 4", false, failure[3].column.toString()};
    c.passed = columnMatches(failure[3].column, 0.0, {2.0 / 3, 1.0 / 3, 0.0}, tol);
    checks.push_back(c);
  }

  auto capacity = replayCapacityExample(20);
  {
    GoldenCheck c{"capacity period 1", false, capacity[0].column.toString()};
    c.passed = columnMatches(capacity[0].column, 0.0, {0.0, 0.5, 0.5}, tol);
    checks.push_back(c);
  }
  {
    int reached = -1;
    for (std::size_t i = 0; i < capacity.size(); ++i) {
      if (columnMatches(capacity[i].column, 0.0, {0.0, 1.0 / 3, 2.0 / 3}, 1e-3)) {
        reached = static_cast<int>(i) + 1;
        break;
      }
    }
    GoldenCheck c{"capacity limit point", reached > 0,
                  reached > 0 ? "reached in period " + std::to_string(reached) : capacity.back().column.toString()};
    checks.push_back(c);
  }
  return checks;
}

} // namespace safsim::saf
