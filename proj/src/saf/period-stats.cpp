#include "safsim/saf/period-stats.hpp"

#include <string>

namespace safsim::saf {

PeriodStats::PeriodStats(std::size_t historyWindow)
  : m_window(historyWindow == 0 ? 1 : historyWindow)
{
}

void
PeriodStats::registerFace(FaceId face)
{
  m_faces.try_emplace(face);
}

const PeriodStats::FaceRecord&
PeriodStats::record(FaceId face) const
{
  auto it = m_faces.find(face);
  if (it == m_faces.end()) {
    throw UnknownFace("face " + std::to_string(face) + " is not registered");
  }
  return it->second;
}

PeriodStats::FaceRecord&
PeriodStats::record(FaceId face)
{
  auto it = m_faces.find(face);
  if (it == m_faces.end()) {
    throw UnknownFace("face " + std::to_string(face) + " is not registered");
  }
  return it->second;
}

void
PeriodStats::addSatisfied(FaceId face, double count)
{
  record(face).satisfied += count;
}

void
PeriodStats::addUnsatisfied(FaceId face, double count)
{
  record(face).unsatisfied += count;
}

double
PeriodStats::satisfied(FaceId face) const
{
  return record(face).satisfied;
}

double
PeriodStats::unsatisfied(FaceId face) const
{
  return record(face).unsatisfied;
}

double
PeriodStats::total() const noexcept
{
  double total = m_dropSatisfied;
  for (const auto& [face, r] : m_faces) {
    total += r.satisfied + r.unsatisfied;
  }
  return total;
}

double
PeriodStats::satisfiedFraction(FaceId face) const
{
  double i = total();
  return i > 0.0 ? record(face).satisfied / i : 0.0;
}

double
PeriodStats::unsatisfiedFraction(FaceId face) const
{
  double i = total();
  return i > 0.0 ? record(face).unsatisfied / i : 0.0;
}

double
PeriodStats::droppedFraction() const noexcept
{
  double i = total();
  return i > 0.0 ? m_dropSatisfied / i : 0.0;
}

double
PeriodStats::reliability(FaceId face) const
{
  const auto& r = record(face);
  double resolved = r.satisfied + r.unsatisfied;
  return resolved > 0.0 ? r.satisfied / resolved : 1.0;
}

double
PeriodStats::unsatisfiedTotalFraction() const noexcept
{
  double i = total();
  if (i <= 0.0) {
    return 0.0;
  }
  double u = 0.0;
  for (const auto& [face, r] : m_faces) {
    u += r.unsatisfied;
  }
  return u / i;
}

double
PeriodStats::unsatisfiedFractionOf(std::span<const FaceId> unreliableFaces) const
{
  double i = total();
  if (i <= 0.0) {
    return 0.0;
  }
  double u = 0.0;
  for (auto f : unreliableFaces) {
    u += record(f).unsatisfied;
  }
  return u / i;
}

std::vector<double>
PeriodStats::history(FaceId face) const
{
  const auto& h = record(face).history;
  return {h.begin(), h.end()};
}

void
PeriodStats::closePeriod()
{
  for (auto& [face, r] : m_faces) {
    r.history.push_back(r.satisfied);
    while (r.history.size() > m_window) {
      r.history.pop_front();
    }
    r.satisfied = 0.0;
    r.unsatisfied = 0.0;
  }
  m_dropSatisfied = 0.0;
}

} // namespace safsim::saf
