#include "safsim/core/pit.hpp"

#include <algorithm>

namespace safsim {

bool
PitEntry::hasNonce(Nonce nonce) const
{
  return std::find(nonces.begin(), nonces.end(), nonce) != nonces.end();
}

const UpstreamRecord*
PitEntry::findUpstream(FaceId face) const
{
  auto it = std::find_if(upstreamFaces.begin(), upstreamFaces.end(),
                         [face] (const UpstreamRecord& r) { return r.face == face; });
  return it == upstreamFaces.end() ? nullptr : &*it;
}

Pit::Pit(Time lifetime)
  : m_lifetime(lifetime)
{
}

PitInsertResult
Pit::insertOrDetectLoop(const Interest& interest, FaceId inFace, Time now)
{
  auto it = m_entries.find(interest.name);
  if (it == m_entries.end()) {
    PitEntry entry;
    entry.name = interest.name;
    entry.nonces.push_back(interest.nonce);
    entry.downstreamFaces.push_back(inFace);
    entry.creation = now;
    entry.expiry = now + m_lifetime;
    entry.id = m_nextId++;
    m_entries.emplace(interest.name, std::move(entry));
    return PitInsertResult::NewEntry;
  }

  PitEntry& entry = it->second;
  if (entry.hasNonce(interest.nonce)) {
    return PitInsertResult::LoopDetected;
  }
  entry.nonces.push_back(interest.nonce);
  auto pos = std::lower_bound(entry.downstreamFaces.begin(), entry.downstreamFaces.end(), inFace);
  if (pos == entry.downstreamFaces.end() || *pos != inFace) {
    entry.downstreamFaces.insert(pos, inFace);
  }
  return PitInsertResult::Aggregated;
}

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::find(const Name& name) const
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

std::vector<FaceId>
Pit::consume(const Name& name)
{
  auto entry = take(name);
  if (!entry) {
    return {};
  }
  return std::move(entry->downstreamFaces);
}

std::optional<PitEntry>
Pit::take(const Name& name)
{
  auto it = m_entries.find(name);
  if (it == m_entries.end()) {
    return std::nullopt;
  }
  PitEntry entry = std::move(it->second);
  m_entries.erase(it);
  return entry;
}

void
Pit::erase(const Name& name)
{
  m_entries.erase(name);
}

DeadNonceList::DeadNonceList(Time lifetime)
  : m_lifetime(lifetime)
{
}

std::size_t
DeadNonceList::makeKey(const Name& name, Nonce nonce)
{
  std::size_t h = NameHash{}(name);
  return h ^ (static_cast<std::size_t>(nonce) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void
DeadNonceList::add(const Name& name, Nonce nonce, Time now)
{
  evictExpired(now);
  auto key = makeKey(name, nonce);
  m_queue.push_back({key, now + m_lifetime});
  m_set.insert(key);
}

bool
DeadNonceList::contains(const Name& name, Nonce nonce, Time now)
{
  evictExpired(now);
  return m_set.count(makeKey(name, nonce)) > 0;
}

void
DeadNonceList::evictExpired(Time now)
{
  while (!m_queue.empty() && m_queue.front().expiry <= now) {
    m_set.erase(m_set.find(m_queue.front().key));
    m_queue.pop_front();
  }
}

} // namespace safsim
