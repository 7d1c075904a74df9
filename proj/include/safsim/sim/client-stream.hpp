#ifndef SAFSIM_SIM_CLIENT_STREAM_HPP
#define SAFSIM_SIM_CLIENT_STREAM_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/name.hpp"
#include "safsim/core/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace safsim::sim {

/** \brief Request pattern of one client: from \p start on, every second
 *  carries \p rate Interests at uniformly drawn instants, naming successive
 *  chunks of \p prefix.
 */
struct ClientStream
{
  NodeId client = 0;
  Name prefix;
  Time start = 0.0;
  double rate = 30.0;
  std::uint64_t catalogueSize = 1;
  std::uint64_t seed = 0;
};

/// Chunk name number \p index of a catalogue, wrapping at its size.
Name
chunkName(const ClientStream& stream, std::uint64_t index);

/** \brief Produces the emission instants of a stream in increasing order.
 */
class EmissionClock
{
public:
  explicit
  EmissionClock(const ClientStream& stream);

  /// next instant strictly before \p until, if any
  std::optional<Time>
  next(Time until);

private:
  void
  fillSecond();

  double m_rate;
  Time m_secondStart;
  Rng m_rng;
  std::vector<Time> m_pending;
  std::size_t m_pos = 0;
};

/// All emission instants of \p stream before \p until.
std::vector<Time>
emissionTimes(const ClientStream& stream, Time until);

} // namespace safsim::sim

#endif // SAFSIM_SIM_CLIENT_STREAM_HPP
