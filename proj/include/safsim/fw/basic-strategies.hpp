#ifndef SAFSIM_FW_BASIC_STRATEGIES_HPP
#define SAFSIM_FW_BASIC_STRATEGIES_HPP

#include "safsim/fw/strategy.hpp"

#include <map>

namespace safsim::fw {

/// Sends every Interest on all FIB faces except the incoming one.
class BroadcastStrategy final : public Strategy
{
public:
  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;
};

/// Lowest-cost FIB face, ties to the lowest face id.
class ShortestRouteStrategy final : public Strategy
{
public:
  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;
};

/** \brief Picks the face with the lowest smoothed Data delay.
 *
 *  Faces with a delay sample rank first by that delay, then faces never
 *  sampled by cost, then faces that timed out at least twice in a row.
 */
class DelayRankStrategy final : public Strategy
{
public:
  explicit
  DelayRankStrategy(double ewmaWeight = 0.3)
    : m_weight(ewmaWeight)
  {
  }

  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;

  void
  onData(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face,
         double delay, std::uint32_t hopCount) override;

  void
  onTimeout(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face) override;

  /// smoothed delay of \p face, if sampled
  std::optional<double>
  delay(const Name& prefix, FaceId face) const;

private:
  struct FaceInfo
  {
    std::optional<double> delay;
    int consecutiveTimeouts = 0;
  };

  double m_weight;
  std::map<Name, std::map<FaceId, FaceInfo>> m_info;
};

/** \brief Random selection weighted by a moving average of the reciprocal
 *  pending-Interest count of each face.
 */
class RfaStrategy final : public Strategy
{
public:
  RfaStrategy(double beta, double interval)
    : m_beta(beta)
    , m_interval(interval)
  {
  }

  Decision
  afterReceiveInterest(StrategyContext& ctx, const Interest& interest,
                       std::optional<FaceId> inFace, const FibEntry& entry) override;

  void
  onData(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face,
         double delay, std::uint32_t hopCount) override;

  void
  onTimeout(StrategyContext& ctx, const FibEntry& entry, const Name& name, FaceId face) override;

  std::optional<Time>
  periodInterval() const override
  {
    return m_interval;
  }

  void
  onPeriod(StrategyContext& ctx) override;

  double
  weight(const Name& prefix, FaceId face) const;

  /// Sets the number of outstanding Interests; used by tests.
  void
  setPending(const Name& prefix, FaceId face, std::uint32_t count);

private:
  struct FaceInfo
  {
    double weight = 1.0;
    std::uint32_t pending = 0;
  };

  std::map<FaceId, FaceInfo>&
  faces(const FibEntry& entry);

  double m_beta;
  double m_interval;
  std::map<Name, std::map<FaceId, FaceInfo>> m_info;
};

} // namespace safsim::fw

#endif // SAFSIM_FW_BASIC_STRATEGIES_HPP
