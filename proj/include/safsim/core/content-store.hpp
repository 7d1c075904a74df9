#ifndef SAFSIM_CORE_CONTENT_STORE_HPP
#define SAFSIM_CORE_CONTENT_STORE_HPP

#include "safsim/core/packet.hpp"

#include <list>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace safsim {

/** \brief Byte-bounded LRU cache of Data packets with exact-name lookup.
 */
class ContentStore
{
public:
  /// thrown when a single Data packet exceeds the whole capacity
  class OversizedObject : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  explicit
  ContentStore(std::uint64_t capacityBytes);

  /** \brief stores \p data as most recently used
   *  \return names evicted to keep the byte budget, least recent first
   */
  std::vector<Name>
  insert(const Data& data);

  /// Exact-name lookup; a hit refreshes recency. Updates hit/miss counters.
  std::optional<Data>
  lookup(const Name& name);

  /// Presence test that neither touches recency nor counters.
  bool
  contains(const Name& name) const
  {
    return m_index.count(name) > 0;
  }

  std::uint64_t
  capacityBytes() const noexcept
  {
    return m_capacity;
  }

  std::uint64_t
  usedBytes() const noexcept
  {
    return m_used;
  }

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  std::uint64_t
  hits() const noexcept
  {
    return m_hits;
  }

  std::uint64_t
  misses() const noexcept
  {
    return m_misses;
  }

  /// hits / (hits + misses), 0 when nothing was looked up
  double
  hitRatio() const noexcept;

  /// Names from most to least recently used.
  std::vector<Name>
  recencyOrder() const;

private:
  std::uint64_t m_capacity;
  std::uint64_t m_used = 0;
  std::uint64_t m_hits = 0;
  std::uint64_t m_misses = 0;
  // front = most recently used
  std::list<Data> m_entries;
  std::unordered_map<Name, std::list<Data>::iterator, NameHash> m_index;
};

} // namespace safsim

#endif // SAFSIM_CORE_CONTENT_STORE_HPP
