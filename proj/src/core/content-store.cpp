#include "safsim/core/content-store.hpp"

namespace safsim {

ContentStore::ContentStore(std::uint64_t capacityBytes)
  : m_capacity(capacityBytes)
{
}

std::vector<Name>
ContentStore::insert(const Data& data)
{
  if (data.payloadSize > m_capacity) {
    throw OversizedObject("Data " + data.name.toUri() + " of " + std::to_string(data.payloadSize) +
                          " B exceeds content store capacity of " + std::to_string(m_capacity) + " B");
  }

  auto it = m_index.find(data.name);
  if (it != m_index.end()) {
    m_used -= it->second->payloadSize;
    m_entries.erase(it->second);
    m_index.erase(it);
  }

  m_entries.push_front(data);
  m_index.emplace(data.name, m_entries.begin());
  m_used += data.payloadSize;

  std::vector<Name> evicted;
  while (m_used > m_capacity) {
    const Data& victim = m_entries.back();
    m_used -= victim.payloadSize;
    evicted.push_back(victim.name);
    m_index.erase(victim.name);
    m_entries.pop_back();
  }
  return evicted;
}

std::optional<Data>
ContentStore::lookup(const Name& name)
{
  auto it = m_index.find(name);
  if (it == m_index.end()) {
    ++m_misses;
    return std::nullopt;
  }
  ++m_hits;
  m_entries.splice(m_entries.begin(), m_entries, it->second);
  return *it->second;
}

double
ContentStore::hitRatio() const noexcept
{
  auto total = m_hits + m_misses;
  return total == 0 ? 0.0 : static_cast<double>(m_hits) / static_cast<double>(total);
}

std::vector<Name>
ContentStore::recencyOrder() const
{
  std::vector<Name> names;
  names.reserve(m_entries.size());
  for (const auto& d : m_entries) {
    names.push_back(d.name);
  }
  return names;
}

} // namespace safsim
