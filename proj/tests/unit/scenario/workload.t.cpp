#include "safsim/scenario/workload.hpp"
#include "safsim/topology/generator.hpp"

#include <doctest.h>

#include <map>

using namespace safsim;
using namespace safsim::scenario;

namespace {

topo::Topology
network(std::uint32_t clients, std::uint32_t servers)
{
  topo::TopologySpec spec;
  spec.asCount = 2;
  spec.routersPerAs = 4;
  spec.extraEdgesTop = 1;
  spec.extraEdgesBottom = 1;
  spec.clientCount = clients;
  spec.serverCount = servers;
  return topo::generate(spec);
}

std::map<Name, double>
shares(const ScenarioConfig& c, const topo::Topology& t)
{
  std::map<Name, double> count;
  double total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& s : generateWorkload(c, t, seed)) {
      count[s.prefix] += 1;
      total += 1;
    }
  }
  for (auto& [name, n] : count) {
    n /= total;
  }
  return count;
}

} // namespace

TEST_SUITE("workload") {

TEST_CASE("zipf shares are normalized reciprocal powers")
{
  auto z = zipfShares(10, 0.668);
  double sum = 0;
  for (auto s : z) {
    sum += s;
  }
  CHECK(sum == doctest::Approx(1.0));
  CHECK(z[0] == doctest::Approx(0.2430).epsilon(0.001));
  CHECK(z[1] / z[0] == doctest::Approx(std::pow(2.0, -0.668)));
}

TEST_CASE("zipf popularity favours the first server")
{
  auto t = network(500, 10);
  ScenarioConfig c;
  c.popularity = Popularity::Zipf;
  auto s = shares(c, t);
  CHECK(s[Name::parse("/server0")] == doctest::Approx(0.2430).epsilon(0.05));
  CHECK(s[Name::parse("/server9")] == doctest::Approx(zipfShares(10, 0.668)[9]).epsilon(0.15));
}

TEST_CASE("uniform popularity spreads evenly")
{
  auto t = network(500, 10);
  ScenarioConfig c;
  for (const auto& [name, share] : shares(c, t)) {
    CHECK(share == doctest::Approx(0.1).epsilon(0.1));
  }
}

TEST_CASE("start offsets respect both caps")
{
  auto t = network(200, 2);
  ScenarioConfig c;
  c.simTime = 20.0;
  double latest = 0;
  for (const auto& s : generateWorkload(c, t, 3)) {
    CHECK(s.start >= 0.0);
    latest = std::max(latest, s.start);
  }
  CHECK(latest <= 10.0);
  CHECK(latest > 9.0);
  c.simTime = 600.0;
  for (const auto& s : generateWorkload(c, t, 3)) {
    CHECK(s.start <= 30.0);
  }
}

TEST_CASE("every client gets one stream with the configured rate")
{
  auto t = network(7, 3);
  ScenarioConfig c;
  c.requestRate = 12.5;
  auto streams = generateWorkload(c, t, 1);
  REQUIRE(streams.size() == 7);
  for (const auto& s : streams) {
    CHECK((t.node(s.client).kind == topo::NodeKind::Client));
    CHECK(s.rate == 12.5);
    CHECK(s.catalogueSize == c.catalogueSize(3));
  }
}

TEST_CASE("rate 30 over 10 seconds from time 0 gives 300 Interests")
{
  sim::ClientStream s{0, Name::parse("/p"), 0.0, 30.0, 100, 4};
  auto times = sim::emissionTimes(s, 10.0);
  CHECK(times.size() == 300);
  CHECK(std::is_sorted(times.begin(), times.end()));
  for (int second = 0; second < 10; ++second) {
    auto n = std::count_if(times.begin(), times.end(), [&] (double x) { return x >= second && x < second + 1; });
    CHECK(n == 30);
  }
}

TEST_CASE("chunk names wrap at the catalogue size")
{
  sim::ClientStream s{0, Name::parse("/server1"), 0.0, 30.0, 3, 0};
  CHECK(sim::chunkName(s, 0).toUri() == "/server1/c0");
  CHECK(sim::chunkName(s, 4).toUri() == "/server1/c1");
}

TEST_CASE("equal seeds give equal workloads")
{
  auto t = network(20, 4);
  ScenarioConfig c;
  c.popularity = Popularity::Zipf;
  auto a = generateWorkload(c, t, 11);
  auto b = generateWorkload(c, t, 11);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].prefix.toUri() == b[i].prefix.toUri());
    CHECK(a[i].start == b[i].start);
    CHECK(a[i].seed == b[i].seed);
  }
}

}
