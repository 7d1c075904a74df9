#include "safsim/topology/generator.hpp"
#include "safsim/core/random.hpp"

#include <algorithm>
#include <cmath>

namespace safsim::topo {

namespace {

constexpr double kMbps = 1e6;

double
drawBandwidth(Rng& rng, BandwidthRange range)
{
  return std::round(rng.uniformReal(range.min, range.max));
}

/// preferential attachment with one link per new node; returns index pairs
std::vector<std::pair<std::size_t, std::size_t>>
attachmentTree(std::size_t n, Rng& rng)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> endpoints;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t target = i == 1 ? 0 : endpoints[rng.uniformIndex(endpoints.size())];
    edges.emplace_back(i, target);
    endpoints.push_back(i);
    endpoints.push_back(target);
  }
  return edges;
}

/// picks \p count distinct entries of \p pool in draw order
template<typename T>
std::vector<T>
sample(std::vector<T> pool, std::size_t count, Rng& rng)
{
  for (std::size_t i = 0; i < count; ++i) {
    auto j = i + rng.uniformIndex(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

} // namespace

BandwidthRange
topBandwidth(BandwidthClass c)
{
  switch (c) {
    case BandwidthClass::Low:
      return {2 * kMbps, 4 * kMbps};
    case BandwidthClass::Medium:
      return {3 * kMbps, 5 * kMbps};
    case BandwidthClass::High:
      return {4 * kMbps, 6 * kMbps};
  }
  return {};
}

BandwidthRange
bottomBandwidth(BandwidthClass c)
{
  switch (c) {
    case BandwidthClass::Low:
      return {1 * kMbps, 2 * kMbps};
    case BandwidthClass::Medium:
      return {2 * kMbps, 4 * kMbps};
    case BandwidthClass::High:
      return {3 * kMbps, 5 * kMbps};
  }
  return {};
}

BandwidthClass
parseBandwidthClass(std::string_view name)
{
  if (name == "low") {
    return BandwidthClass::Low;
  }
  if (name == "medium") {
    return BandwidthClass::Medium;
  }
  if (name == "high") {
    return BandwidthClass::High;
  }
  throw std::invalid_argument("unknown bandwidth class '" + std::string(name) + "'");
}

ConnectivityClass
parseConnectivityClass(std::string_view name)
{
  if (name == "low") {
    return ConnectivityClass::Low;
  }
  if (name == "medium") {
    return ConnectivityClass::Medium;
  }
  if (name == "high") {
    return ConnectivityClass::High;
  }
  throw std::invalid_argument("unknown connectivity class '" + std::string(name) + "'");
}

void
TopologySpec::applyConnectivity(ConnectivityClass c)
{
  switch (c) {
    case ConnectivityClass::Low:
      extraEdgesTop = asCount / 2;
      extraEdgesBottom = routersPerAs / 3;
      break;
    case ConnectivityClass::Medium:
      extraEdgesTop = asCount;
      extraEdgesBottom = routersPerAs / 2;
      break;
    case ConnectivityClass::High:
      extraEdgesTop = asCount * 2;
      extraEdgesBottom = routersPerAs;
      break;
  }
}

void
TopologySpec::validate() const
{
  std::string problems;
  auto require = [&problems] (bool ok, const char* what) {
    if (!ok) {
      problems += problems.empty() ? "" : "; ";
      problems += what;
    }
  };
  require(asCount >= 1, "as_count must be at least 1");
  require(routersPerAs >= 1, "routers_per_as must be at least 1");
  require(clientCount >= 1, "clients must be at least 1");
  require(serverCount >= 1, "servers must be at least 1");
  require(propagationDelay >= 0.0, "link_delay must not be negative");
  if (!problems.empty()) {
    throw std::invalid_argument(problems);
  }
}

void
TopologySpec::checkFeasible() const
{
  const std::size_t mu = asCount;
  const std::size_t nu = routersPerAs;
  std::size_t bottomRoom = nu * (nu - 1) / 2 - (nu - 1);
  if (extraEdgesBottom > bottomRoom) {
    throw InfeasibleSpec("extra_edges_bottom = " + std::to_string(extraEdgesBottom) +
                         " exceeds the " + std::to_string(bottomRoom) + " free router pairs of an AS");
  }
  std::size_t crossPairs = mu * (mu - 1) / 2 * nu * nu;
  std::size_t topRoom = crossPairs - (mu - 1);
  if (extraEdgesTop > topRoom) {
    throw InfeasibleSpec("extra_edges_top = " + std::to_string(extraEdgesTop) +
                         " exceeds the " + std::to_string(topRoom) + " free inter-AS router pairs");
  }
}

Topology
generate(const TopologySpec& spec)
{
  spec.validate();
  const std::size_t mu = spec.asCount;
  const std::size_t nu = spec.routersPerAs;

  spec.checkFeasible();

  Rng rng(spec.seed);
  Topology topo;
  auto top = topBandwidth(spec.bandwidth);
  auto bottom = bottomBandwidth(spec.bandwidth);

  auto router = [nu] (std::size_t as, std::size_t index) {
    return static_cast<NodeId>(as * nu + index);
  };
  for (std::size_t as = 0; as < mu; ++as) {
    for (std::size_t i = 0; i < nu; ++i) {
      topo.addNode(NodeKind::Router, static_cast<std::uint32_t>(as));
    }
  }

  for (std::size_t as = 0; as < mu; ++as) {
    for (auto [u, v] : attachmentTree(nu, rng)) {
      topo.addEdge(router(as, u), router(as, v), drawBandwidth(rng, bottom), spec.propagationDelay, LinkLevel::Bottom);
    }
    std::vector<std::pair<NodeId, NodeId>> free;
    for (std::size_t i = 0; i < nu; ++i) {
      for (std::size_t j = i + 1; j < nu; ++j) {
        if (!topo.hasEdge(router(as, i), router(as, j))) {
          free.emplace_back(router(as, i), router(as, j));
        }
      }
    }
    for (auto [u, v] : sample(std::move(free), spec.extraEdgesBottom, rng)) {
      topo.addEdge(u, v, drawBandwidth(rng, bottom), spec.propagationDelay, LinkLevel::Bottom);
    }
  }

  std::vector<NodeId> gateway(mu);
  for (std::size_t as = 0; as < mu; ++as) {
    gateway[as] = router(as, 0);
    for (std::size_t i = 1; i < nu; ++i) {
      if (topo.degree(router(as, i)) > topo.degree(gateway[as])) {
        gateway[as] = router(as, i);
      }
    }
  }
  for (auto [u, v] : attachmentTree(mu, rng)) {
    topo.addEdge(gateway[u], gateway[v], drawBandwidth(rng, top), spec.propagationDelay, LinkLevel::Top);
  }

  if (spec.extraEdgesTop > 0) {
    std::vector<std::pair<NodeId, NodeId>> free;
    auto routerCount = static_cast<NodeId>(mu * nu);
    for (NodeId a = 0; a < routerCount; ++a) {
      for (NodeId b = a + 1; b < routerCount; ++b) {
        if (topo.node(a).as != topo.node(b).as && !topo.hasEdge(a, b)) {
          free.emplace_back(a, b);
        }
      }
    }
    for (auto [u, v] : sample(std::move(free), spec.extraEdgesTop, rng)) {
      topo.addEdge(u, v, drawBandwidth(rng, top), spec.propagationDelay, LinkLevel::Top);
    }
  }

  auto routerCount = mu * nu;
  Rng placementRng(spec.placementSeed.value_or(0));
  Rng& hosts = spec.placementSeed ? placementRng : rng;
  auto attach = [&] (NodeKind kind) {
    auto r = static_cast<NodeId>(hosts.uniformIndex(routerCount));
    auto id = topo.addNode(kind, topo.node(r).as);
    topo.addEdge(id, r, drawBandwidth(hosts, bottom), spec.propagationDelay, LinkLevel::Bottom);
    return id;
  };
  for (std::uint32_t s = 0; s < spec.serverCount; ++s) {
    auto id = attach(NodeKind::Server);
    topo.addPrefix(id, Name({"server" + std::to_string(s)}));
  }
  for (std::uint32_t c = 0; c < spec.clientCount; ++c) {
    attach(NodeKind::Client);
  }

  if (!topo.isConnected()) {
    throw Topology::Error("generated topology is not connected");
  }
  return topo;
}

} // namespace safsim::topo
