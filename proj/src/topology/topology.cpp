#include "safsim/topology/topology.hpp"

#include <algorithm>
#include <queue>

namespace safsim::topo {

const char*
toString(NodeKind kind)
{
  switch (kind) {
    case NodeKind::Router:
      return "router";
    case NodeKind::Client:
      return "client";
    case NodeKind::Server:
      return "server";
  }
  return "?";
}

const char*
toString(LinkLevel level)
{
  return level == LinkLevel::Top ? "top" : "bottom";
}

NodeId
Topology::addNode(NodeKind kind, std::uint32_t as)
{
  auto id = static_cast<NodeId>(m_nodes.size());
  m_nodes.push_back({id, kind, as});
  m_adjacency.emplace_back();
  return id;
}

std::size_t
Topology::addEdge(NodeId a, NodeId b, double bandwidth, double delay, LinkLevel level)
{
  if (a >= m_nodes.size() || b >= m_nodes.size()) {
    throw Error("edge references unknown node");
  }
  if (a == b) {
    throw Error("self loop on node " + std::to_string(a));
  }
  if (hasEdge(a, b)) {
    throw Error("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  if (!(bandwidth > 0.0) || delay < 0.0) {
    throw Error("edge needs positive bandwidth and non-negative delay");
  }
  std::size_t index = m_edges.size();
  m_edges.push_back({a, b, bandwidth, delay, level});

  auto link = [&] (NodeId self, NodeId other) {
    auto& adj = m_adjacency[self];
    auto pos = std::lower_bound(adj.begin(), adj.end(), other,
                                [] (const Adjacency& x, NodeId id) { return x.neighbor < id; });
    adj.insert(pos, {other, index});
  };
  link(a, b);
  link(b, a);
  return index;
}

void
Topology::addPrefix(NodeId server, Name prefix)
{
  if (server >= m_nodes.size() || m_nodes[server].kind != NodeKind::Server) {
    throw Error("prefix " + prefix.toUri() + " must belong to a server");
  }
  m_prefixes.push_back({server, std::move(prefix)});
}

std::optional<FaceId>
Topology::faceTo(NodeId node, NodeId neighbor) const
{
  const auto& adj = m_adjacency.at(node);
  auto pos = std::lower_bound(adj.begin(), adj.end(), neighbor,
                              [] (const Adjacency& x, NodeId id) { return x.neighbor < id; });
  if (pos == adj.end() || pos->neighbor != neighbor) {
    return std::nullopt;
  }
  return static_cast<FaceId>(pos - adj.begin());
}

bool
Topology::hasEdge(NodeId a, NodeId b) const
{
  return a < m_nodes.size() && b < m_nodes.size() && faceTo(a, b).has_value();
}

std::vector<NodeId>
Topology::nodesOfKind(NodeKind kind) const
{
  std::vector<NodeId> out;
  for (const auto& n : m_nodes) {
    if (n.kind == kind) {
      out.push_back(n.id);
    }
  }
  return out;
}

bool
Topology::isConnected() const
{
  if (m_nodes.empty()) {
    return true;
  }
  std::vector<bool> seen(m_nodes.size(), false);
  std::queue<NodeId> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    auto n = todo.front();
    todo.pop();
    for (const auto& adj : m_adjacency[n]) {
      if (!seen[adj.neighbor]) {
        seen[adj.neighbor] = true;
        ++count;
        todo.push(adj.neighbor);
      }
    }
  }
  return count == m_nodes.size();
}

double
connectivity(const Topology& topology)
{
  auto routers = topology.nodesOfKind(NodeKind::Router);
  if (routers.size() < 2) {
    throw Topology::Error("connectivity needs at least two routers");
  }
  std::size_t degreeSum = 0;
  for (const auto& e : topology.edges()) {
    if (topology.node(e.a).kind == NodeKind::Router && topology.node(e.b).kind == NodeKind::Router) {
      degreeSum += 2;
    }
  }
  double v = static_cast<double>(routers.size());
  return static_cast<double>(degreeSum) / ((v - 1.0) * v);
}

std::vector<std::string>
checkTopology(const Topology& topology)
{
  std::vector<std::string> problems;
  if (!topology.isConnected()) {
    problems.push_back("graph is not connected");
  }
  for (const auto& n : topology.nodes()) {
    if (n.kind == NodeKind::Router) {
      continue;
    }
    const auto& adj = topology.faces(n.id);
    bool attached = adj.size() == 1 && topology.node(adj.front().neighbor).kind == NodeKind::Router;
    if (!attached) {
      problems.push_back(std::string(toString(n.kind)) + " " + std::to_string(n.id) +
                         " must attach to exactly one router");
    }
  }
  for (auto s : topology.nodesOfKind(NodeKind::Server)) {
    bool hasPrefix = std::any_of(topology.prefixes().begin(), topology.prefixes().end(),
                                 [s] (const ContentPrefix& p) { return p.server == s; });
    if (!hasPrefix) {
      problems.push_back("server " + std::to_string(s) + " serves no prefix");
    }
  }
  for (std::size_t i = 0; i < topology.prefixes().size(); ++i) {
    for (std::size_t j = i + 1; j < topology.prefixes().size(); ++j) {
      if (topology.prefixes()[i].prefix == topology.prefixes()[j].prefix) {
        problems.push_back("prefix " + topology.prefixes()[i].prefix.toUri() + " announced twice");
      }
    }
  }
  if (topology.nodesOfKind(NodeKind::Router).empty()) {
    problems.push_back("no routers");
  }
  return problems;
}

} // namespace safsim::topo
