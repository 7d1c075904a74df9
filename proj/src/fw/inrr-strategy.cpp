#include "safsim/fw/inrr-strategy.hpp"
#include "safsim/topology/routing.hpp"

#include <deque>

namespace safsim::fw {

Decision
InrrStrategy::afterReceiveInterest(StrategyContext&, const Interest& interest,
                                   std::optional<FaceId> inFace, const FibEntry& entry)
{
  const auto& topo = *m_env.topology;
  std::vector<NodeId> targets;
  if (m_env.oracle != nullptr) {
    targets = m_env.oracle->holders(interest.name);
  }
  for (const auto& p : topo.prefixes()) {
    if (p.prefix == entry.prefix()) {
      targets.push_back(p.server);
    }
  }

  auto linkUp = [this] (std::size_t edge) {
    return m_env.oracle == nullptr || m_env.oracle->isLinkUp(edge);
  };

  std::vector<std::uint32_t> dist(topo.size(), topo::kUnreachable);
  std::vector<FaceId> firstHop(topo.size(), kDropFace);
  std::deque<NodeId> todo;
  dist[m_env.node] = 0;
  const auto& faces = topo.faces(m_env.node);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto n = faces[f].neighbor;
    if ((inFace && f == *inFace) || !linkUp(faces[f].edge)) {
      continue;
    }
    dist[n] = 1;
    firstHop[n] = static_cast<FaceId>(f);
    todo.push_back(n);
  }
  while (!todo.empty()) {
    auto n = todo.front();
    todo.pop_front();
    if (topo.node(n).kind != topo::NodeKind::Router) {
      continue;
    }
    for (const auto& adj : topo.faces(n)) {
      if (dist[adj.neighbor] == topo::kUnreachable && linkUp(adj.edge)) {
        dist[adj.neighbor] = dist[n] + 1;
        firstHop[adj.neighbor] = firstHop[n];
        todo.push_back(adj.neighbor);
      }
    }
  }

  std::optional<NodeId> best;
  for (auto t : targets) {
    if (t == m_env.node || dist[t] == topo::kUnreachable) {
      continue;
    }
    if (!best || dist[t] < dist[*best] || (dist[t] == dist[*best] && t < *best)) {
      best = t;
    }
  }
  return best ? Decision::to(firstHop[*best]) : Decision::drop();
}

} // namespace safsim::fw
