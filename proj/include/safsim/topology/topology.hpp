#ifndef SAFSIM_TOPOLOGY_TOPOLOGY_HPP
#define SAFSIM_TOPOLOGY_TOPOLOGY_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/name.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace safsim::topo {

enum class NodeKind {
  Router,
  Client,
  Server,
};

/// Top edges connect autonomous systems, bottom edges stay inside one.
enum class LinkLevel {
  Top,
  Bottom,
};

const char*
toString(NodeKind kind);

const char*
toString(LinkLevel level);

inline constexpr double kDefaultPropagationDelay = 0.005;

struct TopologyNode
{
  NodeId id = 0;
  NodeKind kind = NodeKind::Router;
  std::uint32_t as = 0;
};

struct Edge
{
  NodeId a = 0;
  NodeId b = 0;
  /// bits per second
  double bandwidth = 0.0;
  /// seconds
  double delay = kDefaultPropagationDelay;
  LinkLevel level = LinkLevel::Bottom;

  NodeId
  other(NodeId self) const noexcept
  {
    return self == a ? b : a;
  }
};

/// One neighbour as seen from a node: the face index equals the position in faces().
struct Adjacency
{
  NodeId neighbor = 0;
  std::size_t edge = 0;
};

struct ContentPrefix
{
  NodeId server = 0;
  Name prefix;
};

/** \brief Undirected network graph with node roles and per-server prefixes.
 *
 *  Faces of a node are numbered by ascending neighbour identifier, so face ids
 *  are stable under edge insertion order.
 */
class Topology
{
public:
  class Error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  NodeId
  addNode(NodeKind kind, std::uint32_t as = 0);

  /// \throw Error on self loops, parallel edges or unknown endpoints
  std::size_t
  addEdge(NodeId a, NodeId b, double bandwidth, double delay, LinkLevel level);

  void
  addPrefix(NodeId server, Name prefix);

  const std::vector<TopologyNode>&
  nodes() const noexcept
  {
    return m_nodes;
  }

  const TopologyNode&
  node(NodeId id) const
  {
    return m_nodes.at(id);
  }

  std::size_t
  size() const noexcept
  {
    return m_nodes.size();
  }

  const std::vector<Edge>&
  edges() const noexcept
  {
    return m_edges;
  }

  const std::vector<ContentPrefix>&
  prefixes() const noexcept
  {
    return m_prefixes;
  }

  const std::vector<Adjacency>&
  faces(NodeId node) const
  {
    return m_adjacency.at(node);
  }

  std::optional<FaceId>
  faceTo(NodeId node, NodeId neighbor) const;

  bool
  hasEdge(NodeId a, NodeId b) const;

  std::vector<NodeId>
  nodesOfKind(NodeKind kind) const;

  std::size_t
  degree(NodeId node) const
  {
    return m_adjacency.at(node).size();
  }

  bool
  isConnected() const;

private:
  std::vector<TopologyNode> m_nodes;
  std::vector<Edge> m_edges;
  std::vector<std::vector<Adjacency>> m_adjacency;
  std::vector<ContentPrefix> m_prefixes;
};

/** \brief Normalised mean router degree: sum of degrees / ((|V|-1)|V|), over
 *  routers and router-router edges only.
 *  \throw Topology::Error with fewer than two routers
 */
double
connectivity(const Topology& topology);

/// Structural problems of a topology; empty when it is valid.
std::vector<std::string>
checkTopology(const Topology& topology);

} // namespace safsim::topo

#endif // SAFSIM_TOPOLOGY_TOPOLOGY_HPP
