#include "safsim/topology/topology-io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace safsim::topo {

namespace {

std::string
formatNumber(double value)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

template<typename T>
T
parseNumber(const std::string& token, std::size_t line, const char* field)
{
  T value{};
  auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("bad ") + field + " '" + token + "'");
  }
  return value;
}

} // namespace

void
writeTopology(std::ostream& os, const Topology& topology)
{
  os << "# nodes " << topology.size() << " edges " << topology.edges().size() << '\n';
  for (const auto& n : topology.nodes()) {
    os << "node " << n.id << ' ' << toString(n.kind) << ' ' << n.as << '\n';
  }
  for (const auto& e : topology.edges()) {
    os << "edge " << e.a << ' ' << e.b << ' ' << formatNumber(e.bandwidth) << ' '
       << formatNumber(e.delay) << ' ' << toString(e.level) << '\n';
  }
  for (const auto& p : topology.prefixes()) {
    os << "prefix " << p.server << ' ' << p.prefix.toUri() << '\n';
  }
}

Topology
readTopology(std::istream& is)
{
  Topology topo;
  std::string text;
  std::size_t lineNo = 0;
  while (std::getline(is, text)) {
    ++lineNo;
    std::istringstream line(text);
    std::vector<std::string> tok;
    for (std::string t; line >> t;) {
      tok.push_back(t);
    }
    if (tok.empty() || tok[0][0] == '#') {
      continue;
    }

    try {
      if (tok[0] == "node") {
        if (tok.size() != 4) {
          throw ParseError(lineNo, "node needs <id> <kind> <as>");
        }
        auto id = parseNumber<NodeId>(tok[1], lineNo, "node id");
        if (id != topo.size()) {
          throw ParseError(lineNo, "node ids must be consecutive from 0");
        }
        NodeKind kind;
        if (tok[2] == "router") {
          kind = NodeKind::Router;
        }
        else if (tok[2] == "client") {
          kind = NodeKind::Client;
        }
        else if (tok[2] == "server") {
          kind = NodeKind::Server;
        }
        else {
          throw ParseError(lineNo, "unknown node kind '" + tok[2] + "'");
        }
        topo.addNode(kind, parseNumber<std::uint32_t>(tok[3], lineNo, "as"));
      }
      else if (tok[0] == "edge") {
        if (tok.size() != 6) {
          throw ParseError(lineNo, "edge needs <id1> <id2> <bandwidth> <delay> <level>");
        }
        LinkLevel level;
        if (tok[5] == "top") {
          level = LinkLevel::Top;
        }
        else if (tok[5] == "bottom") {
          level = LinkLevel::Bottom;
        }
        else {
          throw ParseError(lineNo, "unknown link level '" + tok[5] + "'");
        }
        topo.addEdge(parseNumber<NodeId>(tok[1], lineNo, "node id"),
                     parseNumber<NodeId>(tok[2], lineNo, "node id"),
                     parseNumber<double>(tok[3], lineNo, "bandwidth"),
                     parseNumber<double>(tok[4], lineNo, "delay"), level);
      }
      else if (tok[0] == "prefix") {
        if (tok.size() != 3) {
          throw ParseError(lineNo, "prefix needs <server-id> </name>");
        }
        topo.addPrefix(parseNumber<NodeId>(tok[1], lineNo, "server id"), Name::parse(tok[2]));
      }
      else {
        throw ParseError(lineNo, "unknown record '" + tok[0] + "'");
      }
    }
    catch (const ParseError&) {
      throw;
    }
    catch (const std::exception& e) {
      throw ParseError(lineNo, e.what());
    }
  }
  return topo;
}

Topology
loadTopology(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open topology file " + path);
  }
  return readTopology(in);
}

void
saveTopology(const std::string& path, const Topology& topology)
{
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write topology file " + path);
  }
  writeTopology(out, topology);
}

} // namespace safsim::topo
