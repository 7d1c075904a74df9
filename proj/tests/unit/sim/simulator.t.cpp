#include "safsim/fw/saf-strategy.hpp"
#include "safsim/sim/simulator.hpp"
#include "safsim/topology/generator.hpp"

#include <doctest.h>

#include <algorithm>

using namespace safsim;
using namespace safsim::sim;

namespace {

using topo::LinkLevel;
using topo::NodeKind;

/// client 0 - router 1 - server 2 serving /p
struct Chain
{
  topo::Topology t;

  Chain()
  {
    t.addNode(NodeKind::Client);
    t.addNode(NodeKind::Router);
    t.addNode(NodeKind::Server);
    t.addEdge(0, 1, 1e6, 0.005, LinkLevel::Bottom);
    t.addEdge(1, 2, 1e6, 0.005, LinkLevel::Bottom);
    t.addPrefix(2, Name::parse("/p"));
  }
};

SimConfig
config(const char* strategy = "shortest-route")
{
  SimConfig c;
  c.strategy.name = strategy;
  c.simTime = 60.0;
  return c;
}

std::uint64_t
resolved(const RunMetrics& m)
{
  return m.satisfied + m.timedOut + m.dropLoop + m.dropQueue + m.dropFd + m.dropLink;
}

} // namespace

TEST_SUITE("simulator") {

TEST_CASE("an empty workload sends no packets")
{
  Chain net;
  Simulator sim(net.t, config("saf"));
  auto m = sim.run();
  CHECK(m.interestsIssued == 0);
  for (const auto& l : m.links) {
    CHECK(l.interests + l.data == 0);
  }
}

TEST_CASE("one request to a directly attached server")
{
  topo::Topology t;
  t.addNode(NodeKind::Client);
  t.addNode(NodeKind::Server);
  t.addEdge(0, 1, 1e6, 0.005, LinkLevel::Bottom);
  t.addPrefix(1, Name::parse("/p"));
  Simulator sim(t, config());
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.nodes[1].interestsReceived == 1);
  CHECK(m.nodes[0].dataReceived == 1);
  CHECK(m.satisfied == 1);
  CHECK(m.meanHopCount == 1.0);
  CHECK(m.meanDelay == doctest::Approx(0.0004 + 0.005 + 0.032768 + 0.005));
}

TEST_CASE("a cached chunk is served by the router")
{
  Chain net;
  Simulator sim(net.t, config());
  sim.issueInterest(0, Name::parse("/p/c0"));
  sim.runUntil(1.0);
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.satisfied == 2);
  CHECK(m.nodes[2].interestsReceived == 1);
  CHECK(m.nodes[1].cacheHits == 1);
  CHECK(m.meanHopCount == doctest::Approx(1.5));
}

TEST_CASE("zero cache capacity disables caching")
{
  Chain net;
  auto c = config();
  c.cacheCapacityBytes = 0;
  Simulator sim(net.t, c);
  sim.issueInterest(0, Name::parse("/p/c0"));
  sim.runUntil(1.0);
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.nodes[2].interestsReceived == 2);
  CHECK(m.nodes[1].cacheHits == 0);
}

TEST_CASE("aggregated requests fan out one Data each")
{
  Chain net;
  net.t.addNode(NodeKind::Client);
  net.t.addEdge(3, 1, 1e6, 0.005, LinkLevel::Bottom);
  Simulator sim(net.t, config());
  sim.issueInterest(0, Name::parse("/p/c0"));
  sim.issueInterest(3, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.satisfied == 2);
  CHECK(m.nodes[2].interestsReceived == 1);
  CHECK(m.links[1].data == 1);
  CHECK(m.links[0].data == 1);
  CHECK(m.links[2].data == 1);
}

TEST_CASE("late Data is cached but not forwarded")
{
  Chain net;
  auto c = config();
  c.interestLifetime = 0.02;
  Simulator sim(net.t, c);
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.timedOut == 1);
  CHECK(m.packetDrops.unsolicitedData == 1);
  CHECK(m.nodes[0].dataReceived == 0);
  CHECK(sim.contentStore(1)->contains(Name::parse("/p/c0")));
}

TEST_CASE("no route is a drop at the node")
{
  Chain net;
  Simulator sim(net.t, config("saf"));
  sim.issueInterest(0, Name::parse("/q/c0"));
  auto m = sim.run();
  CHECK(m.dropFd == 1);
  CHECK(resolved(m) == 1);
}

TEST_CASE("a flooded Interest meeting itself is a loop")
{
  // client 0 - r1; r1 - r2, r1 - r3, r2 - r3, r2 - server 4
  topo::Topology t;
  t.addNode(NodeKind::Client);
  for (int i = 0; i < 3; ++i) {
    t.addNode(NodeKind::Router);
  }
  t.addNode(NodeKind::Server);
  t.addEdge(0, 1, 1e6, 0.005, LinkLevel::Bottom);
  t.addEdge(1, 2, 1e6, 0.005, LinkLevel::Bottom);
  t.addEdge(1, 3, 1e6, 0.005, LinkLevel::Bottom);
  t.addEdge(2, 3, 1e6, 0.005, LinkLevel::Bottom);
  t.addEdge(2, 4, 1e6, 0.005, LinkLevel::Bottom);
  t.addPrefix(4, Name::parse("/p"));
  Simulator sim(t, config("broadcast"));
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.satisfied == 1);
  CHECK(m.packetDrops.loop >= 1);
}

TEST_CASE("a failed link loses packets only while down")
{
  Chain net;
  auto c = config();
  c.simTime = 200.0;
  c.failures = {{1, 10.0, 10.0}};
  Simulator sim(net.t, c);
  sim.runUntil(15.0);
  sim.issueInterest(0, Name::parse("/p/c0"));
  sim.runUntil(35.0);
  sim.issueInterest(0, Name::parse("/p/c1"));
  auto m = sim.run();
  CHECK(m.dropLink == 1);
  CHECK(m.satisfied == 1);
}

TEST_CASE("overlapping failures keep the link down until the last one ends")
{
  Chain net;
  auto c = config();
  c.simTime = 200.0;
  c.failures = {{1, 10.0, 10.0}, {1, 15.0, 15.0}};
  Simulator sim(net.t, c);
  sim.runUntil(25.0);
  sim.issueInterest(0, Name::parse("/p/c0"));
  sim.runUntil(31.0);
  sim.issueInterest(0, Name::parse("/p/c1"));
  auto m = sim.run();
  CHECK(m.dropLink == 1);
  CHECK(m.satisfied == 1);
}

TEST_CASE("packets in flight when a link fails are lost")
{
  Chain net;
  auto c = config();
  c.failures = {{1, 0.01, 0.001}};
  Simulator sim(net.t, c);
  sim.issueInterest(0, Name::parse("/p/c0"));
  auto m = sim.run();
  CHECK(m.dropLink == 1);
}

TEST_CASE("without failures a schedule changes nothing")
{
  Chain net;
  auto c = config();
  c.clients = {{0, Name::parse("/p"), 0.0, 30.0, 50, 7}};
  c.simTime = 5.0;
  auto a = Simulator(net.t, c).run();
  c.failures = {};
  auto b = Simulator(net.t, c).run();
  CHECK(a.satisfied == b.satisfied);
  CHECK(a.events == b.events);
}

TEST_CASE("a stream issues rate Interests per second")
{
  Chain net;
  auto c = config();
  c.clients = {{0, Name::parse("/p"), 0.0, 30.0, 1000, 3}};
  c.simTime = 10.0;
  auto m = Simulator(net.t, c).run();
  CHECK(m.interestsIssued == 300);
  CHECK(resolved(m) == 300);
}

}

TEST_SUITE("simulator properties") {

namespace {

struct Scenario
{
  topo::Topology t;
  SimConfig c;

  Scenario(const std::string& strategy, std::uint64_t seed, std::uint32_t failures)
  {
    topo::TopologySpec spec;
    spec.asCount = 2;
    spec.routersPerAs = 5;
    spec.extraEdgesTop = 2;
    spec.extraEdgesBottom = 3;
    spec.bandwidth = topo::BandwidthClass::Low;
    spec.clientCount = 4;
    spec.serverCount = 2;
    spec.seed = seed;
    t = topo::generate(spec);
    c.strategy.name = strategy;
    c.simTime = 15.0;
    c.seed = seed;
    c.recordTrace = true;
    auto servers = t.prefixes();
    std::uint64_t i = 0;
    for (auto client : t.nodesOfKind(NodeKind::Client)) {
      c.clients.push_back({client, servers[i % servers.size()].prefix, 0.5 * static_cast<double>(i), 40.0, 200,
                           seed * 100 + i});
      ++i;
    }
    c.failures = drawFailures(t, failures, c.simTime, seed + 99);
  }
};

} // namespace

TEST_CASE("every Interest ends in exactly one bucket")
{
  for (const auto& s : fw::strategyNames()) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      CAPTURE(s);
      CAPTURE(seed);
      Scenario sc(s, seed, 5);
      auto m = Simulator(sc.t, sc.c).run();
      CHECK(m.interestsIssued > 0);
      CHECK(resolved(m) == m.interestsIssued);
      CHECK(m.satisfied > 0);
    }
  }
}

TEST_CASE("equal seeds give identical runs")
{
  for (const auto& s : fw::strategyNames()) {
    CAPTURE(s);
    Scenario sc(s, 4, 5);
    Simulator a(sc.t, sc.c);
    Simulator b(sc.t, sc.c);
    auto ma = a.run();
    auto mb = b.run();
    CHECK(ma.satisfied == mb.satisfied);
    CHECK(ma.timedOut == mb.timedOut);
    CHECK(ma.events == mb.events);
    CHECK(ma.meanDelay == mb.meanDelay);
    CHECK(a.trace() == b.trace());
  }
}

TEST_CASE("equal seeds give identical forwarding tables")
{
  Scenario sc("saf", 5, 5);
  Simulator a(sc.t, sc.c);
  Simulator b(sc.t, sc.c);
  for (Time until = 1.0; until <= 15.0; until += 1.0) {
    a.runUntil(until);
    b.runUntil(until);
    for (auto r : sc.t.nodesOfKind(NodeKind::Router)) {
      auto& ta = dynamic_cast<fw::SafStrategy&>(*a.strategy(r)).table();
      auto& tb = dynamic_cast<fw::SafStrategy&>(*b.strategy(r)).table();
      REQUIRE(ta.columns().size() == tb.columns().size());
      for (const auto& [prefix, col] : ta.columns()) {
        const auto* other = tb.find(prefix);
        REQUIRE(other != nullptr);
        REQUIRE(col.column.faces() == other->column.faces());
        for (auto f : col.column.faces()) {
          CHECK(col.column.get(f) == other->column.get(f));
        }
        CHECK(col.column.drop() == other->column.drop());
        CHECK(col.threshold == other->threshold);
      }
    }
  }
}

TEST_CASE("satisfied requests take at least the round trip")
{
  Scenario sc("shortest-route", 6, 0);
  auto m = Simulator(sc.t, sc.c).run();
  CHECK(m.meanDelay >= 2 * 0.005 * m.meanHopCount);
}

}
