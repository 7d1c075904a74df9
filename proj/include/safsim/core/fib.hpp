#ifndef SAFSIM_CORE_FIB_HPP
#define SAFSIM_CORE_FIB_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/name.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace safsim {

struct NextHop
{
  FaceId face;
  /// routing cost in hops, at least 1
  std::uint32_t cost;

  friend bool operator==(const NextHop&, const NextHop&) = default;
};

class FibEntry
{
public:
  FibEntry(Name prefix, std::vector<NextHop> nextHops);

  const Name&
  prefix() const noexcept
  {
    return m_prefix;
  }

  /// sorted by ascending face identifier
  const std::vector<NextHop>&
  nextHops() const noexcept
  {
    return m_nextHops;
  }

  bool
  hasFace(FaceId face) const;

private:
  Name m_prefix;
  std::vector<NextHop> m_nextHops;
};

class Fib
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /** \brief adds or replaces the entry for \p prefix
   *  \throw Error if \p nextHops is empty or a cost is 0
   */
  void
  insert(const Name& prefix, std::vector<NextHop> nextHops);

  /// \return the entry with the longest prefix of \p name, nullptr on NoRoute
  const FibEntry*
  longestPrefixMatch(const Name& name) const;

  const FibEntry*
  findExact(const Name& prefix) const;

  const std::map<Name, FibEntry>&
  entries() const noexcept
  {
    return m_entries;
  }

private:
  std::map<Name, FibEntry> m_entries;
  std::size_t m_maxPrefixLength = 0;
};

} // namespace safsim

#endif // SAFSIM_CORE_FIB_HPP
