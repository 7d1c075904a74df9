#include "safsim/saf/probability-column.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace safsim::saf {

ProbabilityColumn::ProbabilityColumn(std::vector<std::pair<FaceId, double>> physical, double dropProbability)
  : m_drop(dropProbability)
{
  std::sort(physical.begin(), physical.end());
  for (std::size_t i = 0; i < physical.size(); ++i) {
    if (physical[i].first == kDropFace || (i > 0 && physical[i].first == physical[i - 1].first)) {
      throw std::invalid_argument("column faces must be distinct physical faces");
    }
    m_faces.push_back(physical[i].first);
    m_probs.push_back(physical[i].second);
  }
}

ProbabilityColumn
ProbabilityColumn::uniform(std::span<const FaceId> faces)
{
  std::vector<std::pair<FaceId, double>> entries;
  for (auto f : faces) {
    entries.emplace_back(f, 1.0 / static_cast<double>(faces.size()));
  }
  return ProbabilityColumn(std::move(entries), faces.empty() ? 1.0 : 0.0);
}

ProbabilityColumn
ProbabilityColumn::costWeighted(std::span<const NextHop> nextHops)
{
  double norm = 0.0;
  for (const auto& h : nextHops) {
    norm += 1.0 / h.cost;
  }
  std::vector<std::pair<FaceId, double>> entries;
  for (const auto& h : nextHops) {
    entries.emplace_back(h.face, (1.0 / h.cost) / norm);
  }
  return ProbabilityColumn(std::move(entries), nextHops.empty() ? 1.0 : 0.0);
}

std::size_t
ProbabilityColumn::indexOf(FaceId face) const noexcept
{
  auto it = std::lower_bound(m_faces.begin(), m_faces.end(), face);
  if (it == m_faces.end() || *it != face) {
    return m_faces.size();
  }
  return static_cast<std::size_t>(it - m_faces.begin());
}

bool
ProbabilityColumn::hasFace(FaceId face) const noexcept
{
  return indexOf(face) < m_faces.size();
}

double
ProbabilityColumn::get(FaceId face) const noexcept
{
  if (face == kDropFace) {
    return m_drop;
  }
  auto i = indexOf(face);
  return i < m_faces.size() ? m_probs[i] : 0.0;
}

void
ProbabilityColumn::set(FaceId face, double p)
{
  if (face == kDropFace) {
    m_drop = p;
    return;
  }
  auto i = indexOf(face);
  if (i == m_faces.size()) {
    throw std::out_of_range("face " + std::to_string(face) + " is not in the column");
  }
  m_probs[i] = p;
}

double
ProbabilityColumn::sum() const noexcept
{
  double s = m_drop;
  for (auto p : m_probs) {
    s += p;
  }
  return s;
}

std::string
ProbabilityColumn::toString() const
{
  std::ostringstream os;
  os << "{FD:" << m_drop;
  for (std::size_t i = 0; i < m_faces.size(); ++i) {
    os << ", F" << m_faces[i] << ':' << m_probs[i];
  }
  os << '}';
  return os.str();
}

} // namespace safsim::saf
