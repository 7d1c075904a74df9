#ifndef SAFSIM_SAF_PERIOD_STATS_HPP
#define SAFSIM_SAF_PERIOD_STATS_HPP

#include "safsim/core/common.hpp"

#include <deque>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace safsim::saf {

class UnknownFace : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

/** \brief Satisfied/unsatisfied counters of one prefix during the current
 *  period, plus a bounded history of satisfied counts per face.
 *
 *  Counters are real-valued so the deterministic split harness can feed
 *  fractional traffic; the simulator only ever adds whole Interests.
 *  All fractions are relative to I, the resolved traffic of the period
 *  including Interests discarded on the dropping face.
 */
class PeriodStats
{
public:
  explicit
  PeriodStats(std::size_t historyWindow = 5);

  void
  registerFace(FaceId face);

  bool
  hasFace(FaceId face) const noexcept
  {
    return m_faces.count(face) > 0;
  }

  /// \throw UnknownFace
  void
  addSatisfied(FaceId face, double count = 1.0);

  /// \throw UnknownFace
  void
  addUnsatisfied(FaceId face, double count = 1.0);

  /// Interests discarded on the dropping face count as satisfied there.
  void
  addDropped(double count = 1.0) noexcept
  {
    m_dropSatisfied += count;
  }

  double
  satisfied(FaceId face) const;

  double
  unsatisfied(FaceId face) const;

  double
  droppedSatisfied() const noexcept
  {
    return m_dropSatisfied;
  }

  /// I: all resolved Interests of the period, pending ones excluded
  double
  total() const noexcept;

  /// ST of a physical face
  double
  satisfiedFraction(FaceId face) const;

  /// UT of a physical face
  double
  unsatisfiedFraction(FaceId face) const;

  /// ST of the dropping face
  double
  droppedFraction() const noexcept;

  /// R = S/(S+U), 1 for a face without resolved traffic
  double
  reliability(FaceId face) const;

  /// delta: overall unsatisfied fraction
  double
  unsatisfiedTotalFraction() const noexcept;

  /// delta_U: unsatisfied fraction carried by \p unreliableFaces
  double
  unsatisfiedFractionOf(std::span<const FaceId> unreliableFaces) const;

  /// satisfied counts of past periods, oldest first, at most window entries
  std::vector<double>
  history(FaceId face) const;

  std::size_t
  historyWindow() const noexcept
  {
    return m_window;
  }

  /// appends each face's satisfied count to its history and zeroes all counters
  void
  closePeriod();

private:
  struct FaceRecord
  {
    double satisfied = 0.0;
    double unsatisfied = 0.0;
    std::deque<double> history;
  };

  const FaceRecord&
  record(FaceId face) const;

  FaceRecord&
  record(FaceId face);

  std::size_t m_window;
  std::map<FaceId, FaceRecord> m_faces;
  double m_dropSatisfied = 0.0;
};

} // namespace safsim::saf

#endif // SAFSIM_SAF_PERIOD_STATS_HPP
