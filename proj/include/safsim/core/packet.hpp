#ifndef SAFSIM_CORE_PACKET_HPP
#define SAFSIM_CORE_PACKET_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/name.hpp"

namespace safsim {

inline constexpr std::uint32_t kDefaultPayloadSize = 4096;

/// Bytes an Interest occupies on the wire.
inline constexpr std::uint32_t kInterestWireSize = 50;

struct Interest
{
  Name name;
  Nonce nonce = 0;
  /// links traversed so far
  std::uint32_t hopCount = 0;
  Time issueTime = 0.0;
};

struct Data
{
  Name name;
  std::uint32_t payloadSize = kDefaultPayloadSize;
  /// links traversed since the Data left its producer or cache
  std::uint32_t hopCount = 0;
};

} // namespace safsim

#endif // SAFSIM_CORE_PACKET_HPP
