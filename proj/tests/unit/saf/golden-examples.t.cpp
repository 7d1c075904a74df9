#include "safsim/saf/golden-examples.hpp"

#include <doctest.h>

using namespace safsim;
using namespace safsim::saf;

namespace {

void
checkColumn(const ProbabilityColumn& c, double drop, double f0, double f1, double f2)
{
  INFO(c.toString());
  CHECK(std::abs(c.drop() - drop) < 1e-6);
  CHECK(std::abs(c.get(0) - f0) < 1e-6);
  CHECK(std::abs(c.get(1) - f1) < 1e-6);
  CHECK(std::abs(c.get(2) - f2) < 1e-6);
}

} // namespace

TEST_SUITE("golden examples") {

TEST_CASE("link failure replay")
{
  auto periods = replayLinkFailureExample();
  REQUIRE(periods.size() == 4);

  const auto& p1 = periods[0].report;
  CHECK(p1.partition.unreliable == std::vector<FaceId>{2});
  CHECK(p1.partition.satisfying == std::vector<FaceId>{1});
  CHECK(p1.partition.probing == std::vector<FaceId>{0});
  CHECK(p1.rho == doctest::Approx(2.0 / 3));
  checkColumn(periods[0].column, 2.0 / 9, 4.0 / 9, 1.0 / 3, 0.0);

  const auto& p2 = periods[1].report;
  CHECK(std::abs(p2.sigmaShare.at(0) - 0.148) < 1e-3);
  CHECK(std::abs(p2.sigmaShare.at(1) - 0.111) < 1e-3);
  checkColumn(periods[1].column, 0.0, 4.0 / 7, 3.0 / 7, 0.0);

  CHECK(periods[2].report.branch == UpdateBranch::Tighten);
  checkColumn(periods[2].column, 0.0, 4.0 / 7, 3.0 / 7, 0.0);

  CHECK(periods[3].report.partition.unreliable == std::vector<FaceId>{1});
  checkColumn(periods[3].column, 0.0, 2.0 / 3, 1.0 / 3, 0.0);
}

TEST_CASE("capacity replay")
{
  auto periods = replayCapacityExample(20);
  checkColumn(periods[0].column, 0.0, 0.0, 0.5, 0.5);
  bool reached = false;
  for (const auto& p : periods) {
    if (std::abs(p.column.get(1) - 1.0 / 3) < 1e-3 && std::abs(p.column.get(2) - 2.0 / 3) < 1e-3) {
      reached = true;
    }
  }
  CHECK(reached);
  CHECK(std::abs(periods.back().column.get(1) - 1.0 / 3) < 1e-3);
}

TEST_CASE("summary checks all pass")
{
  for (const auto& c : checkGoldenExamples()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("real-valued sigma misses the first link failure column")
{
  SafParams params;
  params.alphaOverride = 1.0;
  params.sigmaMode = SigmaMode::Real;
  SplitHarness harness(ProbabilityColumn({{0, 0.0}, {1, 1.0 / 3}, {2, 2.0 / 3}}, 0.0), 0.99, params, kReplayDemand);
  harness.setCapacity(2, 0.0);
  harness.step();
  CHECK(harness.column().get(1) > 1.0 / 3 + 1e-3);
}

}
