#include "safsim/sim/simulator.hpp"
#include "safsim/topology/routing.hpp"

#include <algorithm>
#include <stdexcept>

namespace safsim::sim {

namespace {

constexpr std::uint64_t kNodeStream = 0x100;
constexpr std::uint64_t kNonceStream = 0x200;

/// deterministic value in [0,1) per node, used to stagger periodic work
double
phaseOf(NodeId node)
{
  return static_cast<double>(mixSeed(node, 0x9a5e) >> 11) * 0x1.0p-53;
}

} // namespace

Simulator::Simulator(const topo::Topology& topology, SimConfig config)
  : m_topology(topology)
  , m_config(std::move(config))
{
  m_config.strategy.validate();
  validateFailures(m_config.failures, topology.edges().size(), m_config.simTime);
  if (!(m_config.simTime > 0.0) || !(m_config.interestLifetime > 0.0)) {
    throw std::invalid_argument("sim_time and interest lifetime must be positive");
  }

  m_fibs = topo::bootstrapFibs(topology);
  if (m_config.strategy.name == "ompif") {
    m_ompif = std::make_unique<fw::OmpIfRegistry>(topology);
  }
  m_trackCaches = m_config.strategy.name == "inrr";
  m_periodEnd = m_config.simTime;

  m_nodes.resize(topology.size());
  for (const auto& n : topology.nodes()) {
    auto& state = m_nodes[n.id];
    state.kind = n.kind;
    for (const auto& adj : topology.faces(n.id)) {
      state.reverseFace.push_back(*topology.faceTo(adj.neighbor, n.id));
    }
    if (n.kind != topo::NodeKind::Router) {
      continue;
    }
    state.pit = std::make_unique<Pit>(m_config.interestLifetime);
    state.deadNonces = std::make_unique<DeadNonceList>(m_config.interestLifetime);
    state.cs = std::make_unique<ContentStore>(m_config.cacheCapacityBytes);
    state.rng = std::make_unique<Rng>(mixSeed(m_config.seed, kNodeStream + n.id));
    fw::NodeEnvironment env{n.id, &topology, &m_fibs[n.id], this, m_ompif.get()};
    state.strategy = fw::makeStrategy(m_config.strategy, env);
  }

  m_links.resize(topology.edges().size());
  m_metrics.links.resize(topology.edges().size());
  m_metrics.nodes.resize(topology.size());

  for (std::size_t i = 0; i < m_config.clients.size(); ++i) {
    const auto& s = m_config.clients[i];
    if (s.client >= topology.size() || topology.node(s.client).kind != topo::NodeKind::Client ||
        topology.faces(s.client).empty()) {
      throw std::invalid_argument("request stream for node " + std::to_string(s.client) +
                                  " which is not an attached client");
    }
    m_streams.push_back({s, EmissionClock(s), 0});
    if (auto t = m_streams.back().clock.next(m_config.simTime)) {
      m_events.schedule(*t, ClientRequest{i});
    }
  }

  for (const auto& n : topology.nodes()) {
    const auto& state = m_nodes[n.id];
    if (!state.strategy) {
      continue;
    }
    if (auto tau = state.strategy->periodInterval()) {
      Time first = m_config.alignPeriods ? *tau : *tau * (1.0 - phaseOf(n.id));
      if (first <= m_periodEnd) {
        m_events.schedule(first, PeriodBoundary{n.id});
      }
    }
  }

  for (const auto& f : m_config.failures) {
    m_events.schedule(f.start, LinkDown{f.edge});
    m_events.schedule(f.start + f.duration, LinkUp{f.edge});
  }
}

Simulator::~Simulator() = default;

std::uint64_t
Simulator::runUntil(Time until)
{
  std::uint64_t count = 0;
  while (!m_events.empty() && m_events.nextTime() <= until) {
    auto event = m_events.pop();
    m_now = event.time;
    dispatch(event.action);
    ++count;
  }
  m_now = std::max(m_now, until);
  m_metrics.events += count;
  return count;
}

RunMetrics
Simulator::run()
{
  // every client Interest is resolved one lifetime after the last emission
  runUntil(m_config.simTime + m_config.interestLifetime + 1.0);
  return metrics();
}

RunMetrics
Simulator::metrics() const
{
  RunMetrics m = m_metrics;
  if (m.interestsIssued > 0) {
    m.satisfactionRatio = static_cast<double>(m.satisfied) / static_cast<double>(m.interestsIssued);
  }
  if (m.satisfied > 0) {
    m.meanHopCount = m_hopSum / static_cast<double>(m.satisfied);
    m.meanDelay = m_delaySum / static_cast<double>(m.satisfied);
  }
  double hitSum = 0.0;
  std::size_t routers = 0;
  for (std::size_t i = 0; i < m_nodes.size(); ++i) {
    const auto& cs = m_nodes[i].cs;
    if (m_nodes[i].kind != topo::NodeKind::Router) {
      continue;
    }
    ++routers;
    hitSum += cs->hitRatio();
    m.nodes[i].cacheHits = cs->hits();
    m.nodes[i].cacheMisses = cs->misses();
  }
  if (routers > 0) {
    m.cacheHitRatio = hitSum / static_cast<double>(routers);
  }
  return m;
}

fw::Strategy*
Simulator::strategy(NodeId node)
{
  return m_nodes.at(node).strategy.get();
}

const ContentStore*
Simulator::contentStore(NodeId node) const
{
  return m_nodes.at(node).cs.get();
}

bool
Simulator::isLinkUp(std::size_t edge) const
{
  return m_links.at(edge).downCount == 0;
}

std::vector<NodeId>
Simulator::holders(const Name& name) const
{
  auto it = m_cacheIndex.find(name);
  return it == m_cacheIndex.end() ? std::vector<NodeId>{} : it->second;
}

void
Simulator::dispatch(Action& action)
{
  std::visit([this] (auto& a) {
    using T = std::decay_t<decltype(a)>;
    if constexpr (std::is_same_v<T, InterestArrival>) {
      onInterest(a);
    }
    else if constexpr (std::is_same_v<T, DataArrival>) {
      onData(a);
    }
    else if constexpr (std::is_same_v<T, PitExpiry>) {
      onPitExpiry(a);
    }
    else if constexpr (std::is_same_v<T, PeriodBoundary>) {
      onPeriod(a.node);
    }
    else if constexpr (std::is_same_v<T, LinkDown>) {
      onLinkDown(a.edge);
    }
    else if constexpr (std::is_same_v<T, LinkUp>) {
      onLinkUp(a.edge);
    }
    else if constexpr (std::is_same_v<T, ClientRequest>) {
      onClientRequest(a.stream);
    }
    else {
      onClientTimeout(a);
    }
  }, action);
}

void
Simulator::issueInterest(NodeId client, const Name& name)
{
  auto& node = m_nodes.at(client);
  if (node.kind != topo::NodeKind::Client) {
    throw std::invalid_argument("only clients issue Interests");
  }
  Interest interest{name, mixSeed(m_config.seed ^ kNonceStream, ++m_nonceCounter), 0, m_now};
  ++m_metrics.interestsIssued;
  node.pending[name].push_back({interest.nonce, m_now});
  m_events.schedule(m_now + m_config.interestLifetime, ClientTimeout{client, name, interest.nonce});
  sendInterest(client, 0, interest);
}

void
Simulator::onClientRequest(std::size_t index)
{
  auto& s = m_streams[index];
  issueInterest(s.stream.client, chunkName(s.stream, s.nextChunk++));
  if (auto t = s.clock.next(m_config.simTime)) {
    m_events.schedule(*t, ClientRequest{index});
  }
}

void
Simulator::onClientTimeout(const ClientTimeout& t)
{
  auto& pending = m_nodes[t.client].pending;
  auto it = pending.find(t.name);
  if (it == pending.end()) {
    return;
  }
  auto& list = it->second;
  auto req = std::find_if(list.begin(), list.end(), [&] (const PendingRequest& r) { return r.nonce == t.nonce; });
  if (req == list.end()) {
    return;
  }
  list.erase(req);
  if (list.empty()) {
    pending.erase(it);
  }

  auto cause = m_firstDrop.find(t.nonce);
  if (cause == m_firstDrop.end()) {
    ++m_metrics.timedOut;
    return;
  }
  switch (cause->second) {
    case DropCause::Loop:
      ++m_metrics.dropLoop;
      break;
    case DropCause::Queue:
      ++m_metrics.dropQueue;
      break;
    case DropCause::DropFace:
      ++m_metrics.dropFd;
      break;
    case DropCause::Link:
      ++m_metrics.dropLink;
      break;
  }
  m_firstDrop.erase(cause);
}

void
Simulator::recordDrop(std::span<const Nonce> nonces, DropCause cause)
{
  for (auto n : nonces) {
    m_firstDrop.try_emplace(n, cause);
  }
}

bool
Simulator::transmit(NodeId node, FaceId face, std::uint32_t bytes, Time& arrival, std::size_t& edge,
                    std::span<const Nonce> nonces, bool isInterest)
{
  edge = m_topology.faces(node)[face].edge;
  const auto& e = m_topology.edges()[edge];
  auto& link = m_links[edge];
  if (link.downCount > 0) {
    ++m_metrics.packetDrops.link;
    recordDrop(nonces, DropCause::Link);
    return false;
  }
  auto& dir = link.dir[node == e.a ? 0 : 1];
  auto at = dir.transmit(m_now, bytes, e.bandwidth, e.delay, m_config.queueCapacity);
  if (!at) {
    ++m_metrics.packetDrops.queue;
    recordDrop(nonces, DropCause::Queue);
    return false;
  }
  arrival = *at;
  if (isInterest) {
    ++m_metrics.links[edge].interests;
  }
  else {
    ++m_metrics.links[edge].data;
  }
  return true;
}

void
Simulator::sendInterest(NodeId node, FaceId face, const Interest& interest)
{
  Time arrival = 0.0;
  std::size_t edge = 0;
  Nonce nonce[] = {interest.nonce};
  if (!transmit(node, face, m_config.interestSize, arrival, edge, nonce, true)) {
    return;
  }
  Interest copy = interest;
  ++copy.hopCount;
  NodeId neighbor = m_topology.faces(node)[face].neighbor;
  m_events.schedule(arrival, InterestArrival{neighbor, m_nodes[node].reverseFace[face], std::move(copy),
                                             edge, m_links[edge].epoch});
}

void
Simulator::sendData(NodeId node, FaceId face, const Data& data, std::vector<Nonce> nonces)
{
  Time arrival = 0.0;
  std::size_t edge = 0;
  if (!transmit(node, face, data.payloadSize, arrival, edge, nonces, false)) {
    return;
  }
  Data copy = data;
  ++copy.hopCount;
  NodeId neighbor = m_topology.faces(node)[face].neighbor;
  m_events.schedule(arrival, DataArrival{neighbor, m_nodes[node].reverseFace[face], std::move(copy),
                                         std::move(nonces), edge, m_links[edge].epoch});
}

void
Simulator::onInterest(InterestArrival& a)
{
  if (m_links[a.edge].epoch != a.epoch) {
    ++m_metrics.packetDrops.link;
    Nonce nonce[] = {a.interest.nonce};
    recordDrop(nonce, DropCause::Link);
    return;
  }
  ++m_metrics.nodes[a.node].interestsReceived;
  switch (m_nodes[a.node].kind) {
    case topo::NodeKind::Router:
      routerInterest(a.node, a.face, a.interest);
      break;
    case topo::NodeKind::Server: {
      for (const auto& p : m_topology.prefixes()) {
        if (p.server == a.node && p.prefix.isPrefixOf(a.interest.name)) {
          sendData(a.node, a.face, Data{a.interest.name, m_config.payloadSize, 0}, {a.interest.nonce});
          return;
        }
      }
      ++m_metrics.packetDrops.dropFace;
      Nonce nonce[] = {a.interest.nonce};
      recordDrop(nonce, DropCause::DropFace);
      break;
    }
    case topo::NodeKind::Client:
      break;
  }
}

void
Simulator::routerInterest(NodeId id, FaceId inFace, const Interest& interest)
{
  auto& node = m_nodes[id];
  Nonce nonce[] = {interest.nonce};

  if (auto hit = node.cs->lookup(interest.name)) {
    hit->hopCount = 0;
    sendData(id, inFace, *hit, {interest.nonce});
    return;
  }

  if (node.deadNonces->contains(interest.name, interest.nonce, m_now)) {
    ++m_metrics.packetDrops.loop;
    recordDrop(nonce, DropCause::Loop);
    return;
  }
  auto result = node.pit->insertOrDetectLoop(interest, inFace, m_now);
  if (result == PitInsertResult::LoopDetected) {
    ++m_metrics.packetDrops.loop;
    recordDrop(nonce, DropCause::Loop);
    return;
  }
  if (result == PitInsertResult::Aggregated) {
    return;
  }

  auto* entry = node.pit->find(interest.name);
  const auto* fibEntry = m_fibs[id].longestPrefixMatch(interest.name);
  fw::Decision decision;
  if (fibEntry != nullptr) {
    fw::StrategyContext ctx{m_now, *node.rng};
    decision = node.strategy->afterReceiveInterest(ctx, interest, inFace, *fibEntry);
  }
  if (m_config.recordTrace) {
    m_trace.push_back({m_now, id, interest.name, interest.nonce, inFace, decision.faces, decision.viaDropFace});
  }

  if (decision.isDrop()) {
    node.pit->erase(interest.name);
    ++m_metrics.packetDrops.dropFace;
    recordDrop(nonce, DropCause::DropFace);
    return;
  }

  m_events.schedule(entry->expiry, PitExpiry{id, interest.name, entry->id});
  for (auto face : decision.faces) {
    entry->upstreamFaces.push_back({face, m_now});
  }
  for (auto face : decision.faces) {
    sendInterest(id, face, interest);
  }
}

void
Simulator::cacheInsert(NodeId id, const Data& data)
{
  auto& cs = *m_nodes[id].cs;
  if (cs.capacityBytes() < data.payloadSize) {
    return;
  }
  bool had = cs.contains(data.name);
  auto evicted = cs.insert(data);
  if (!m_trackCaches) {
    return;
  }
  if (!had) {
    auto& list = m_cacheIndex[data.name];
    list.insert(std::lower_bound(list.begin(), list.end(), id), id);
  }
  for (const auto& name : evicted) {
    auto it = m_cacheIndex.find(name);
    if (it == m_cacheIndex.end()) {
      continue;
    }
    auto& list = it->second;
    list.erase(std::remove(list.begin(), list.end(), id), list.end());
    if (list.empty()) {
      m_cacheIndex.erase(it);
    }
  }
}

void
Simulator::onData(DataArrival& a)
{
  if (m_links[a.edge].epoch != a.epoch) {
    ++m_metrics.packetDrops.link;
    recordDrop(a.nonces, DropCause::Link);
    return;
  }
  ++m_metrics.nodes[a.node].dataReceived;
  auto& node = m_nodes[a.node];

  if (node.kind == topo::NodeKind::Client) {
    auto it = node.pending.find(a.data.name);
    if (it == node.pending.end()) {
      ++m_metrics.packetDrops.unsolicitedData;
      return;
    }
    for (const auto& req : it->second) {
      ++m_metrics.satisfied;
      m_hopSum += a.data.hopCount;
      m_delaySum += m_now - req.issueTime;
      m_firstDrop.erase(req.nonce);
    }
    node.pending.erase(it);
    return;
  }
  if (node.kind != topo::NodeKind::Router) {
    return;
  }

  cacheInsert(a.node, a.data);
  auto entry = node.pit->take(a.data.name);
  if (!entry) {
    ++m_metrics.packetDrops.unsolicitedData;
    return;
  }
  const auto* fibEntry = m_fibs[a.node].longestPrefixMatch(a.data.name);
  const auto* up = entry->findUpstream(a.face);
  if (fibEntry != nullptr && up != nullptr) {
    fw::StrategyContext ctx{m_now, *node.rng};
    node.strategy->onData(ctx, *fibEntry, a.data.name, a.face, m_now - up->sendTime, a.data.hopCount);
  }
  for (auto n : entry->nonces) {
    node.deadNonces->add(a.data.name, n, m_now);
  }
  for (auto face : entry->downstreamFaces) {
    if (face != a.face) {
      sendData(a.node, face, a.data, entry->nonces);
    }
  }
}

void
Simulator::onPitExpiry(const PitExpiry& e)
{
  auto& node = m_nodes[e.node];
  const auto* current = node.pit->find(e.name);
  if (current == nullptr || current->id != e.entryId) {
    return;
  }
  auto entry = node.pit->take(e.name);
  const auto* fibEntry = m_fibs[e.node].longestPrefixMatch(e.name);
  if (fibEntry != nullptr) {
    fw::StrategyContext ctx{m_now, *node.rng};
    for (const auto& up : entry->upstreamFaces) {
      node.strategy->onTimeout(ctx, *fibEntry, e.name, up.face);
    }
  }
  for (auto n : entry->nonces) {
    node.deadNonces->add(e.name, n, m_now);
  }
}

void
Simulator::onPeriod(NodeId id)
{
  auto& node = m_nodes[id];
  fw::StrategyContext ctx{m_now, *node.rng};
  node.strategy->onPeriod(ctx);
  Time next = m_now + *node.strategy->periodInterval();
  if (next <= m_periodEnd) {
    m_events.schedule(next, PeriodBoundary{id});
  }
}

void
Simulator::onLinkDown(std::size_t edge)
{
  auto& link = m_links[edge];
  if (link.downCount++ == 0) {
    ++link.epoch;
    for (auto& dir : link.dir) {
      dir.reset(m_now);
    }
  }
}

void
Simulator::onLinkUp(std::size_t edge)
{
  auto& link = m_links[edge];
  if (link.downCount > 0) {
    --link.downCount;
  }
}

} // namespace safsim::sim
