#ifndef SAFSIM_SAF_MEASURE_HPP
#define SAFSIM_SAF_MEASURE_HPP

#include "safsim/core/common.hpp"
#include "safsim/saf/period-stats.hpp"

namespace safsim::saf {

/// What the statistic collector learns about one forwarded Interest.
struct OutcomeRecord
{
  FaceId face = 0;
  /// seconds between forwarding and Data arrival; unused on timeout
  double delay = 0.0;
  std::uint32_t hopCount = 0;
  bool dataBeforeTimeout = false;
};

enum class Outcome {
  Satisfied,
  Unsatisfied,
};

/// Decides which resolved Interests count as satisfied on a face.
class Measure
{
public:
  virtual
  ~Measure() = default;

  virtual Outcome
  classify(const OutcomeRecord& record) const = 0;
};

/// Throughput measure: Data before timeout is satisfied, anything else is not.
class ThroughputMeasure final : public Measure
{
public:
  Outcome
  classify(const OutcomeRecord& record) const override;
};

/// Satisfied only if the Data travelled fewer than maxHops links.
class HopCountMeasure final : public Measure
{
public:
  explicit
  HopCountMeasure(std::uint32_t maxHops)
    : m_maxHops(maxHops)
  {
  }

  Outcome
  classify(const OutcomeRecord& record) const override;

private:
  std::uint32_t m_maxHops;
};

/** \brief Adds one resolved Interest to the counters of the closing period.
 *
 *  Interests sent to the dropping face are passed with face == kDropFace and
 *  are always counted as satisfied there.
 *  \throw UnknownFace if \p record.face was never registered
 */
void
recordOutcome(PeriodStats& stats, const OutcomeRecord& record, const Measure& measure);

} // namespace safsim::saf

#endif // SAFSIM_SAF_MEASURE_HPP
