#include "safsim/topology/routing.hpp"

#include <queue>

namespace safsim::topo {

std::vector<std::uint32_t>
distancesTo(const Topology& topology, NodeId origin, NodeId excluded)
{
  std::vector<std::uint32_t> dist(topology.size(), kUnreachable);
  if (origin == excluded) {
    return dist;
  }
  std::queue<NodeId> todo;
  dist[origin] = 0;
  todo.push(origin);
  while (!todo.empty()) {
    auto n = todo.front();
    todo.pop();
    if (n != origin && topology.node(n).kind != NodeKind::Router) {
      continue;
    }
    for (const auto& adj : topology.faces(n)) {
      if (adj.neighbor != excluded && dist[adj.neighbor] == kUnreachable) {
        dist[adj.neighbor] = dist[n] + 1;
        todo.push(adj.neighbor);
      }
    }
  }
  return dist;
}

std::vector<Fib>
bootstrapFibs(const Topology& topology)
{
  std::vector<Fib> fibs(topology.size());
  for (const auto& content : topology.prefixes()) {
    for (const auto& node : topology.nodes()) {
      if (node.id == content.server) {
        continue;
      }
      std::vector<NextHop> hops;
      if (node.kind == NodeKind::Router) {
        auto dist = distancesTo(topology, content.server, node.id);
        const auto& faces = topology.faces(node.id);
        for (std::size_t f = 0; f < faces.size(); ++f) {
          auto n = faces[f].neighbor;
          bool relays = n == content.server || topology.node(n).kind == NodeKind::Router;
          if (relays && dist[n] != kUnreachable) {
            hops.push_back({static_cast<FaceId>(f), dist[n] + 1});
          }
        }
      }
      else if (!topology.faces(node.id).empty()) {
        // a host only talks to its access router
        auto access = topology.faces(node.id).front().neighbor;
        auto dist = distancesTo(topology, content.server, node.id);
        if (access == content.server || dist[access] != kUnreachable) {
          hops.push_back({0, dist[access] + 1});
        }
      }
      if (!hops.empty()) {
        fibs[node.id].insert(content.prefix, std::move(hops));
      }
    }
  }
  return fibs;
}

} // namespace safsim::topo
