#include "safsim/scenario/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace safsim;
using namespace safsim::scenario;

namespace {

ScenarioConfig
smallScenario(const std::string& strategy = "saf")
{
  ScenarioConfig c;
  c.topology.asCount = 2;
  c.topology.routersPerAs = 4;
  c.topology.extraEdgesTop = 1;
  c.topology.extraEdgesBottom = 1;
  c.topology.bandwidth = topo::BandwidthClass::Low;
  c.topology.clientCount = 4;
  c.topology.serverCount = 2;
  c.strategy.name = strategy;
  c.simTime = 8.0;
  c.maxStartOffset = 2.0;
  c.runs = 3;
  c.linkFailures = 2;
  c.seed = 5;
  return c;
}

std::string
csvOf(const ScenarioReport& r)
{
  std::ostringstream out;
  writeCsv(out, r);
  return out.str();
}

} // namespace

TEST_SUITE("statistics") {

TEST_CASE("a single run has no spread")
{
  std::vector<double> v{0.7};
  auto s = summarize(v);
  CHECK(s.mean == 0.7);
  CHECK(s.halfWidth == 0.0);
  CHECK(s.count == 1);
}

TEST_CASE("student-t half width")
{
  std::vector<double> v{0.8, 0.9, 0.8, 0.9};
  auto s = summarize(v);
  CHECK(s.mean == doctest::Approx(0.85));
  CHECK(s.halfWidth == doctest::Approx(0.0919).epsilon(0.001));
}

}

TEST_SUITE("runner") {

TEST_CASE("aggregates are the plain means of the runs")
{
  auto report = runScenario(smallScenario(), 1);
  REQUIRE(report.runs.size() == 3);
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    CHECK(report.runs[i].run == i);
    CHECK(report.runs[i].seed == 5 + i);
  }
  for (const auto& name : metricNames()) {
    double sum = 0;
    for (const auto& r : report.runs) {
      sum += metricValue(r.metrics, name);
    }
    CHECK(report.summary(name).mean == sum / 3);
  }
}

TEST_CASE("ratios and identities hold in every run")
{
  for (const auto& s : fw::strategyNames()) {
    CAPTURE(s);
    auto report = runScenario(smallScenario(s), 1);
    for (const auto& r : report.runs) {
      const auto& m = r.metrics;
      CHECK(m.satisfactionRatio >= 0.0);
      CHECK(m.satisfactionRatio <= 1.0);
      CHECK(m.cacheHitRatio >= 0.0);
      CHECK(m.cacheHitRatio <= 1.0);
      CHECK(m.satisfactionRatio == static_cast<double>(m.satisfied) / static_cast<double>(m.interestsIssued));
      std::uint64_t received = 0;
      for (auto c : r.topology.nodesOfKind(topo::NodeKind::Client)) {
        received += m.nodes[c].dataReceived;
      }
      CHECK(received >= m.satisfied);
      CHECK(m.satisfied + m.timedOut + m.dropLoop + m.dropQueue + m.dropFd + m.dropLink == m.interestsIssued);
      if (m.satisfied > 0) {
        CHECK(m.meanHopCount >= 1.0);
      }
    }
  }
}

TEST_CASE("parallel and serial batches give the same report")
{
  auto config = smallScenario();
  config.runs = 4;
  CHECK(csvOf(runScenario(config, 1)) == csvOf(runScenario(config, 3)));
}

TEST_CASE("a failing run aborts the batch and names the run")
{
  auto config = smallScenario();
  config.topology.extraEdgesTop = 1000;
  CHECK_THROWS_AS(runScenario(config, 1), ValidationError);
  config = smallScenario();
  config.topologyFile = "/nonexistent/net.topo";
  CHECK_THROWS_WITH_AS(runScenario(config, 2), doctest::Contains("run 0 (seed 5)"), std::runtime_error);
}

}

TEST_SUITE("reports") {

TEST_CASE("csv has a fixed header, one row per run and a mean row")
{
  auto report = runScenario(smallScenario(), 1);
  auto csv = csvOf(report);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "run,seed,satisfaction_ratio,cache_hit_ratio,mean_hop_count,drop_loop,drop_queue,drop_fd,drop_link");
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("0,5,", 0) == 0);
  CHECK(rows[3].rfind("mean,,", 0) == 0);
}

TEST_CASE("emitting twice gives identical bytes")
{
  auto report = runScenario(smallScenario(), 1);
  CHECK(csvOf(report) == csvOf(report));
  std::ostringstream a;
  std::ostringstream b;
  writeJsonReport(a, report);
  writeJsonReport(b, report);
  CHECK(a.str() == b.str());
  CHECK(csvOf(runScenario(smallScenario(), 1)) == csvOf(report));
}

TEST_CASE("the structured report lists every edge and node once")
{
  auto report = runScenario(smallScenario(), 1);
  std::ostringstream out;
  writeJsonReport(out, report);
  auto j = nlohmann::json::parse(out.str());
  REQUIRE(j["runs"].size() == 3);
  CHECK(j["summary"]["satisfaction_ratio"]["runs"] == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& topology = report.runs[i].topology;
    const auto& links = j["runs"][i]["links"];
    REQUIRE(links.size() == topology.edges().size());
    std::set<std::size_t> ids;
    std::uint64_t interests = 0;
    for (const auto& l : links) {
      ids.insert(l["edge"].get<std::size_t>());
      interests += l["interests"].get<std::uint64_t>();
    }
    CHECK(ids.size() == topology.edges().size());
    CHECK(interests > 0);
    CHECK(j["runs"][i]["nodes"].size() == topology.size());
  }
}

TEST_CASE("report formats by name")
{
  CHECK((parseReportFormat("csv") == ReportFormat::Csv));
  CHECK((parseReportFormat("report") == ReportFormat::Report));
  CHECK_THROWS_AS(parseReportFormat("xml"), std::invalid_argument);
}

}
