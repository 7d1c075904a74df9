#ifndef SAFSIM_TOPOLOGY_TOPOLOGY_IO_HPP
#define SAFSIM_TOPOLOGY_TOPOLOGY_IO_HPP

#include "safsim/topology/topology.hpp"

#include <iosfwd>

namespace safsim::topo {

class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what)
    , m_line(line)
  {
  }

  std::size_t
  line() const noexcept
  {
    return m_line;
  }

private:
  std::size_t m_line;
};

/** \brief Line-oriented text form:
 *
 *      node <id> <router|client|server> <as>
 *      edge <id1> <id2> <bandwidth_bps> <delay_s> <top|bottom>
 *      prefix <server-id> </name>
 *
 *  Lines starting with '#' are comments. Numbers are written in their
 *  shortest exact form, so a write/read cycle reproduces the topology.
 */
void
writeTopology(std::ostream& os, const Topology& topology);

/// \throw ParseError
Topology
readTopology(std::istream& is);

Topology
loadTopology(const std::string& path);

void
saveTopology(const std::string& path, const Topology& topology);

} // namespace safsim::topo

#endif // SAFSIM_TOPOLOGY_TOPOLOGY_IO_HPP
