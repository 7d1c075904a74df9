#ifndef SAFSIM_CORE_PIT_HPP
#define SAFSIM_CORE_PIT_HPP

#include "safsim/core/packet.hpp"

#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace safsim {

inline constexpr Time kDefaultInterestLifetime = 2.0;

struct UpstreamRecord
{
  FaceId face;
  Time sendTime;
};

struct PitEntry
{
  Name name;
  std::vector<Nonce> nonces;
  /// sorted, unique
  std::vector<FaceId> downstreamFaces;
  std::vector<UpstreamRecord> upstreamFaces;
  Time creation = 0.0;
  Time expiry = 0.0;
  /// distinguishes successive entries for the same name
  std::uint64_t id = 0;

  bool
  hasNonce(Nonce nonce) const;

  const UpstreamRecord*
  findUpstream(FaceId face) const;
};

enum class PitInsertResult {
  NewEntry,
  Aggregated,
  LoopDetected,
};

/** \brief Pending Interest Table of one node.
 *
 *  Entries are keyed by exact name. Expiry is driven externally: the owner
 *  schedules a timer at entry.expiry and calls erase() when it fires.
 */
class Pit
{
public:
  explicit
  Pit(Time lifetime = kDefaultInterestLifetime);

  PitInsertResult
  insertOrDetectLoop(const Interest& interest, FaceId inFace, Time now);

  PitEntry*
  find(const Name& name);

  const PitEntry*
  find(const Name& name) const;

  /** \brief removes the entry matching \p name
   *  \return the downstream faces of the removed entry, empty for unsolicited Data
   */
  std::vector<FaceId>
  consume(const Name& name);

  /// Like consume() but hands back the whole entry.
  std::optional<PitEntry>
  take(const Name& name);

  void
  erase(const Name& name);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  Time
  lifetime() const noexcept
  {
    return m_lifetime;
  }

private:
  Time m_lifetime;
  std::uint64_t m_nextId = 1;
  std::unordered_map<Name, PitEntry, NameHash> m_entries;
};

/** \brief Remembers nonces of Interests whose PIT entry has already been
 *  satisfied, so late duplicates are still recognised as loops.
 */
class DeadNonceList
{
public:
  explicit
  DeadNonceList(Time lifetime = kDefaultInterestLifetime);

  void
  add(const Name& name, Nonce nonce, Time now);

  bool
  contains(const Name& name, Nonce nonce, Time now);

  std::size_t
  size() const noexcept
  {
    return m_set.size();
  }

private:
  void
  evictExpired(Time now);

  struct Record
  {
    std::size_t key;
    Time expiry;
  };

  static std::size_t
  makeKey(const Name& name, Nonce nonce);

  Time m_lifetime;
  std::deque<Record> m_queue;
  std::unordered_multiset<std::size_t> m_set;
};

} // namespace safsim

#endif // SAFSIM_CORE_PIT_HPP
