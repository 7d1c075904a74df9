#include "safsim/core/fib.hpp"

#include <algorithm>

namespace safsim {

FibEntry::FibEntry(Name prefix, std::vector<NextHop> nextHops)
  : m_prefix(std::move(prefix))
  , m_nextHops(std::move(nextHops))
{
  std::sort(m_nextHops.begin(), m_nextHops.end(),
            [] (const NextHop& a, const NextHop& b) { return a.face < b.face; });
}

bool
FibEntry::hasFace(FaceId face) const
{
  return std::any_of(m_nextHops.begin(), m_nextHops.end(),
                     [face] (const NextHop& h) { return h.face == face; });
}

void
Fib::insert(const Name& prefix, std::vector<NextHop> nextHops)
{
  if (nextHops.empty()) {
    throw Error("FIB entry " + prefix.toUri() + " needs at least one next hop");
  }
  for (std::size_t i = 0; i < nextHops.size(); ++i) {
    if (nextHops[i].cost < 1) {
      throw Error("FIB entry " + prefix.toUri() + " has a next hop with cost 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (nextHops[j].face == nextHops[i].face) {
        throw Error("FIB entry " + prefix.toUri() + " lists a face twice");
      }
    }
  }
  m_entries.insert_or_assign(prefix, FibEntry(prefix, std::move(nextHops)));
  m_maxPrefixLength = std::max(m_maxPrefixLength, prefix.size());
}

const FibEntry*
Fib::longestPrefixMatch(const Name& name) const
{
  if (m_entries.empty()) {
    return nullptr;
  }
  for (std::size_t len = std::min(name.size(), m_maxPrefixLength) + 1; len-- > 0;) {
    auto it = m_entries.find(name.getPrefix(len));
    if (it != m_entries.end()) {
      return &it->second;
    }
  }
  return nullptr;
}

const FibEntry*
Fib::findExact(const Name& prefix) const
{
  auto it = m_entries.find(prefix);
  return it == m_entries.end() ? nullptr : &it->second;
}

} // namespace safsim
