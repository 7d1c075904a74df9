#include "safsim/fw/ompif-strategy.hpp"

#include <algorithm>

namespace safsim::fw {

void
OmpIfRegistry::attach(NodeId node, OmpIfStrategy* strategy)
{
  m_strategies[node] = strategy;
}

std::optional<FaceId>
OmpIfRegistry::pinnedFace(NodeId node, const Name& prefix) const
{
  auto it = m_strategies.find(node);
  if (it == m_strategies.end()) {
    return std::nullopt;
  }
  return it->second->pinnedFace(prefix);
}

std::optional<std::vector<NodeId>>
OmpIfRegistry::walk(NodeId start, FaceId face, const Name& prefix) const
{
  std::vector<NodeId> path;
  std::set<NodeId> visited{start};
  NodeId current = m_topology.faces(start).at(face).neighbor;
  while (true) {
    const auto& node = m_topology.node(current);
    if (node.kind == topo::NodeKind::Server) {
      for (const auto& p : m_topology.prefixes()) {
        if (p.server == current && p.prefix.isPrefixOf(prefix)) {
          return path;
        }
      }
      return std::nullopt;
    }
    if (node.kind != topo::NodeKind::Router || !visited.insert(current).second) {
      return std::nullopt;
    }
    path.push_back(current);
    auto next = pinnedFace(current, prefix);
    if (!next) {
      return std::nullopt;
    }
    current = m_topology.faces(current).at(*next).neighbor;
  }
}

void
OmpIfRegistry::setActivePaths(NodeId access, const Name& prefix, std::vector<std::vector<NodeId>> paths)
{
  m_active[{access, prefix}] = std::move(paths);
}

const std::vector<std::vector<NodeId>>&
OmpIfRegistry::activePaths(NodeId access, const Name& prefix) const
{
  static const std::vector<std::vector<NodeId>> none;
  auto it = m_active.find({access, prefix});
  return it == m_active.end() ? none : it->second;
}

OmpIfStrategy::OmpIfStrategy(const NodeEnvironment& env, double probeInterval, double delayWeight)
  : m_env(env)
  , m_probeInterval(probeInterval)
  , m_delayWeight(delayWeight)
{
  if (m_env.ompif != nullptr) {
    m_env.ompif->attach(m_env.node, this);
  }
}

OmpIfStrategy::PrefixState&
OmpIfStrategy::state(const FibEntry& entry)
{
  auto& s = m_prefixes[entry.prefix()];
  if (!s.pin) {
    const NextHop* best = nullptr;
    for (const auto& hop : entry.nextHops()) {
      if (best == nullptr || hop.cost < best->cost) {
        best = &hop;
      }
    }
    s.pin = best->face;
  }
  return s;
}

std::optional<FaceId>
OmpIfStrategy::pinnedFace(const Name& prefix) const
{
  auto it = m_prefixes.find(prefix);
  if (it != m_prefixes.end() && it->second.pin) {
    return it->second.pin;
  }
  if (m_env.fib == nullptr) {
    return std::nullopt;
  }
  const auto* entry = m_env.fib->longestPrefixMatch(prefix);
  if (entry == nullptr) {
    return std::nullopt;
  }
  const NextHop* best = nullptr;
  for (const auto& hop : entry->nextHops()) {
    if (best == nullptr || hop.cost < best->cost) {
      best = &hop;
    }
  }
  return best->face;
}

bool
OmpIfStrategy::fromConsumer(std::optional<FaceId> inFace) const
{
  if (!inFace) {
    return true;
  }
  const auto& faces = m_env.topology->faces(m_env.node);
  return *inFace < faces.size() &&
         m_env.topology->node(faces[*inFace].neighbor).kind == topo::NodeKind::Client;
}

std::vector<FaceId>
OmpIfStrategy::disjointFaces(const FibEntry& entry)
{
  struct Candidate
  {
    FaceId face;
    std::vector<NodeId> path;
  };
  std::vector<Candidate> candidates;
  for (const auto& hop : entry.nextHops()) {
    if (auto path = m_env.ompif->walk(m_env.node, hop.face, entry.prefix())) {
      candidates.push_back({hop.face, std::move(*path)});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [] (const Candidate& a, const Candidate& b) {
    return a.path.size() < b.path.size();
  });

  std::set<NodeId> used;
  std::vector<FaceId> faces;
  std::vector<std::vector<NodeId>> paths;
  for (auto& c : candidates) {
    bool disjoint = std::none_of(c.path.begin(), c.path.end(), [&] (NodeId n) { return used.count(n) > 0; });
    if (disjoint) {
      used.insert(c.path.begin(), c.path.end());
      faces.push_back(c.face);
      paths.push_back(std::move(c.path));
    }
  }
  m_env.ompif->setActivePaths(m_env.node, entry.prefix(), std::move(paths));
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::map<FaceId, double>
OmpIfStrategy::rawWeights(const PrefixState& s, const std::vector<FaceId>& faces)
{
  std::map<FaceId, double> w;
  double known = 0.0;
  std::size_t measured = 0;
  for (auto f : faces) {
    auto d = s.delay.find(f);
    if (d != s.delay.end()) {
      w[f] = 1.0 / std::max(d->second, 1e-9);
      known += w[f];
      ++measured;
    }
  }
  // unmeasured faces get the mean weight of the measured ones
  double fallback = measured > 0 ? known / static_cast<double>(measured) : 1.0;
  for (auto f : faces) {
    w.try_emplace(f, fallback);
  }
  return w;
}

std::map<FaceId, double>
OmpIfStrategy::weights(const FibEntry& entry)
{
  auto w = rawWeights(state(entry), disjointFaces(entry));
  double total = 0.0;
  for (const auto& [f, v] : w) {
    total += v;
  }
  for (auto& [f, v] : w) {
    v /= total;
  }
  return w;
}

void
OmpIfStrategy::setDelay(const Name& prefix, FaceId face, double delay)
{
  m_prefixes[prefix].delay[face] = delay;
}

Decision
OmpIfStrategy::afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                                    std::optional<FaceId> inFace, const FibEntry& entry)
{
  auto& s = state(entry);
  if (s.nextProbe < 0.0) {
    s.nextProbe = ctx.now + m_probeInterval;
  }
  else if (ctx.now >= s.nextProbe) {
    s.nextProbe = ctx.now + m_probeInterval;
    Decision d;
    for (const auto& hop : entry.nextHops()) {
      if (!inFace || hop.face != *inFace) {
        d.faces.push_back(hop.face);
      }
    }
    if (!d.faces.empty()) {
      m_probes.insert(interest.name);
    }
    return d;
  }

  if (fromConsumer(inFace) && m_env.ompif != nullptr) {
    auto faces = disjointFaces(entry);
    if (!faces.empty()) {
      // smooth weighted round robin
      auto w = rawWeights(s, faces);
      double total = 0.0;
      FaceId chosen = faces.front();
      double bestCredit = -1e300;
      for (auto f : faces) {
        total += w[f];
        s.credit[f] += w[f];
        if (s.credit[f] > bestCredit) {
          bestCredit = s.credit[f];
          chosen = f;
        }
      }
      s.credit[chosen] -= total;
      return Decision::to(chosen);
    }
  }

  if (inFace && *s.pin == *inFace) {
    return Decision::drop();
  }
  return Decision::to(*s.pin);
}

void
OmpIfStrategy::onData(StrategyContext&, const FibEntry& entry, const Name& name, FaceId face,
                      double delay, std::uint32_t)
{
  auto& s = state(entry);
  auto d = s.delay.find(face);
  if (d == s.delay.end()) {
    s.delay[face] = delay;
  }
  else {
    d->second = (1.0 - m_delayWeight) * d->second + m_delayWeight * delay;
  }
  if (m_probes.erase(name) > 0) {
    s.pin = face;
  }
}

void
OmpIfStrategy::onTimeout(StrategyContext&, const FibEntry&, const Name& name, FaceId)
{
  m_probes.erase(name);
}

} // namespace safsim::fw
