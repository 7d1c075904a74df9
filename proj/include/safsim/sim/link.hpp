#ifndef SAFSIM_SIM_LINK_HPP
#define SAFSIM_SIM_LINK_HPP

#include "safsim/core/common.hpp"

#include <cstdint>
#include <deque>
#include <optional>

namespace safsim::sim {

/** \brief One direction of a link: a FIFO serializer with a bounded queue.
 *
 *  Every accepted packet occupies a queue slot until its last bit has left.
 */
class LinkDirection
{
public:
  /// Arrival time at the far end, or nullopt if the queue is full.
  std::optional<Time>
  transmit(Time now, std::uint32_t bytes, double bandwidth, Time delay, std::size_t queueCapacity);

  /// Number of packets not yet fully serialized at \p now.
  std::size_t
  backlog(Time now);

  /// Discards everything queued; the link is idle from \p now.
  void
  reset(Time now);

  Time
  busyUntil() const noexcept
  {
    return m_busyUntil;
  }

private:
  Time m_busyUntil = 0.0;
  std::deque<Time> m_inService;
};

} // namespace safsim::sim

#endif // SAFSIM_SIM_LINK_HPP
