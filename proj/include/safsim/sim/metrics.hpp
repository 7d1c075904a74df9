#ifndef SAFSIM_SIM_METRICS_HPP
#define SAFSIM_SIM_METRICS_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/name.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace safsim::sim {

enum class DropCause {
  Loop,
  Queue,
  DropFace,
  Link,
};

/// Transmission counts of one link, summed over both directions.
struct LinkCounters
{
  std::uint64_t interests = 0;
  std::uint64_t data = 0;
};

struct NodeCounters
{
  std::uint64_t cacheHits = 0;
  std::uint64_t cacheMisses = 0;
  std::uint64_t interestsReceived = 0;
  std::uint64_t dataReceived = 0;
};

/// Packet-level losses anywhere in the network.
struct PacketDrops
{
  std::uint64_t loop = 0;
  std::uint64_t queue = 0;
  std::uint64_t dropFace = 0;
  std::uint64_t link = 0;
  std::uint64_t unsolicitedData = 0;
};

/** \brief Outcome of one simulation run.
 *
 *  Every client Interest ends up in exactly one of satisfied, timedOut and
 *  the four drop buckets; a dropped Interest is filed under the first drop
 *  seen for its nonce.
 */
struct RunMetrics
{
  std::uint64_t interestsIssued = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t timedOut = 0;
  std::uint64_t dropLoop = 0;
  std::uint64_t dropQueue = 0;
  std::uint64_t dropFd = 0;
  std::uint64_t dropLink = 0;

  double satisfactionRatio = 0.0;
  /// mean over routers
  double cacheHitRatio = 0.0;
  /// mean over satisfied client Interests
  double meanHopCount = 0.0;
  /// mean over satisfied client Interests, seconds
  double meanDelay = 0.0;

  std::vector<LinkCounters> links;
  std::vector<NodeCounters> nodes;
  PacketDrops packetDrops;
  std::uint64_t events = 0;
};

/// One strategy invocation, for trace comparison.
struct DecisionRecord
{
  Time time = 0.0;
  NodeId node = 0;
  Name name;
  Nonce nonce = 0;
  std::optional<FaceId> inFace;
  std::vector<FaceId> faces;
  bool viaDropFace = false;

  bool
  operator==(const DecisionRecord&) const = default;
};

} // namespace safsim::sim

#endif // SAFSIM_SIM_METRICS_HPP
