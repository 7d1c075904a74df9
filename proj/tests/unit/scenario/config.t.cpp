#include "safsim/scenario/config.hpp"

#include <doctest.h>

#include <sstream>

using namespace safsim;
using namespace safsim::scenario;

namespace {

ScenarioConfig
parse(const std::string& text)
{
  std::istringstream in(text);
  return parseConfig(in);
}

const char* kMinimal = R"(
[topology]
as_count = 2
routers_per_as = 5
connectivity = medium

[strategy]
name = saf
)";

} // namespace

TEST_SUITE("scenario config") {

TEST_CASE("a minimal config gets every default")
{
  auto c = parse(kMinimal);
  CHECK(c.topology.asCount == 2);
  CHECK(c.topology.routersPerAs == 5);
  CHECK(c.topology.clientCount == 100);
  CHECK(c.strategy.name == "saf");
  CHECK(c.strategy.saf.periodTau == 1.0);
  CHECK(c.requestRate == 30.0);
  CHECK((c.popularity == Popularity::Uniform));
  CHECK(c.zipfAlpha == doctest::Approx(0.668));
  CHECK(c.cacheCapacityBytes == 25'000'000);
  CHECK(c.runs == 1);
  CHECK(c.linkFailures == 0);
  CHECK_FALSE(c.topologyFile);
}

TEST_CASE("strategy parameters reach the strategy")
{
  auto c = parse(std::string(kMinimal) + "period_tau = 0.5\nt_min = 0.3\nsigma_mode = real\n");
  CHECK(c.strategy.saf.periodTau == 0.5);
  CHECK(c.strategy.saf.tMin == 0.3);
  CHECK((c.strategy.saf.sigmaMode == saf::SigmaMode::Real));
}

TEST_CASE("invalid values are all reported")
{
  try {
    parse(std::string(kMinimal) + "[workload]\nzipf_alpha = -1\n[run]\nsim_time = 0\nruns = 0\n");
    FAIL("expected a validation error");
  }
  catch (const ValidationError& e) {
    CHECK(e.problems().size() == 3);
  }
  CHECK_THROWS_AS(parse("[strategy]\nname = nope\n"), ValidationError);
  CHECK_THROWS_AS(parse("[topology]\nextra_edges_bottom = 400\n[strategy]\nname = saf\n"), ValidationError);
}

TEST_CASE("syntax errors carry the line and field")
{
  try {
    parse("[topology]\nas_count = 2\n\n[run]\nseeds = 4\n");
    FAIL("expected a parse error");
  }
  catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.field() == "run.seeds");
  }
  CHECK_THROWS_AS(parse("[nowhere]\n"), ParseError);
  CHECK_THROWS_AS(parse("as_count = 2\n"), ParseError);
  CHECK_THROWS_AS(parse("[run]\nruns = many\n"), ParseError);
  CHECK_THROWS_AS(parse("[run]\nruns = 3\nruns = 4\n"), ParseError);
  CHECK_THROWS_AS(parse("[run]\nruns\n"), ParseError);
  CHECK_THROWS_AS(parse("[run\n"), ParseError);
  CHECK_THROWS_AS(parse("[workload]\npopularity = pareto\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored")
{
  auto c = parse("# scenario\n[run] ; trailing\n  runs = 4   # four\n\n");
  CHECK(c.runs == 4);
}

TEST_CASE("connectivity does not depend on key order")
{
  auto a = parse("[topology]\nconnectivity = medium\nas_count = 2\nrouters_per_as = 6\n");
  auto b = parse("[topology]\nas_count = 2\nrouters_per_as = 6\nconnectivity = medium\n");
  CHECK(a.topologySpec(1).extraEdgesBottom == 3);
  CHECK(a.topologySpec(1).extraEdgesTop == 2);
  CHECK(b.topologySpec(1).extraEdgesBottom == 3);
}

TEST_CASE("the router graph stays fixed across runs unless asked otherwise")
{
  auto c = parse("[run]\nseed = 7\n");
  CHECK(c.topologySpec(8).seed == 7);
  CHECK(c.topologySpec(8).placementSeed != c.topologySpec(9).placementSeed);
  c.varyGraph = true;
  CHECK(c.topologySpec(8).seed == 8);
}

TEST_CASE("catalogue keeps the cache at about 1% of the content")
{
  ScenarioConfig c;
  c.cacheCapacityBytes = 4096 * 100;
  CHECK(c.catalogueSize(10) == 1000);
  CHECK(c.catalogueSize(1) == 10000);
  c.cacheCapacityBytes = 0;
  CHECK(c.catalogueSize(3) == 1);
}

TEST_CASE("a relative topology file is resolved against the config directory")
{
  std::istringstream in("[topology]\nfile = net.topo\n");
  auto c = parseConfig(in, "/data/scenarios");
  REQUIRE(c.topologyFile);
  CHECK(*c.topologyFile == std::filesystem::path("/data/scenarios/net.topo"));
}

}
