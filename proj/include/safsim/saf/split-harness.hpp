#ifndef SAFSIM_SAF_SPLIT_HARNESS_HPP
#define SAFSIM_SAF_SPLIT_HARNESS_HPP

#include "safsim/saf/update.hpp"

#include <map>

namespace safsim::saf {

/** \brief Single-node replay of SAF with exact proportional splitting.
 *
 *  Each period a constant demand of I Interests is split over the column
 *  exactly (face f receives p(f)·I), each physical face satisfies up to its
 *  capacity and leaves the rest unsatisfied, and the dropping face absorbs
 *  its share. No sampling is involved, so runs are bit-reproducible and the
 *  unsatisfied fraction of an overloaded face is exactly p(f) - d(f)/I.
 */
class SplitHarness
{
public:
  SplitHarness(ProbabilityColumn initial, double threshold, SafParams params, double demand);

  /// Interests per period \p face can satisfy; unlimited unless set.
  void
  setCapacity(FaceId face, double capacity);

  void
  setThreshold(double threshold)
  {
    m_threshold = threshold;
  }

  /// While frozen, updates may not move the threshold.
  void
  freezeThreshold(bool frozen)
  {
    m_frozen = frozen;
  }

  void
  setColumn(ProbabilityColumn column)
  {
    m_column = std::move(column);
  }

  /// Runs one period and its update.
  UpdateReport
  step();

  const ProbabilityColumn&
  column() const noexcept
  {
    return m_column;
  }

  double
  threshold() const noexcept
  {
    return m_threshold;
  }

  double
  demand() const noexcept
  {
    return m_demand;
  }

private:
  ProbabilityColumn m_column;
  double m_threshold;
  SafParams m_params;
  double m_demand;
  bool m_frozen = false;
  std::map<FaceId, double> m_capacity;
  PeriodStats m_stats;
};

} // namespace safsim::saf

#endif // SAFSIM_SAF_SPLIT_HARNESS_HPP
