#ifndef SAFSIM_CORE_COMMON_HPP
#define SAFSIM_CORE_COMMON_HPP

#include <cstdint>
#include <limits>

namespace safsim {

/// Identifies a face local to one node. Faces of a node are numbered
/// 0..n-1 in ascending order of the neighbour's node identifier.
using FaceId = std::uint32_t;

/// Identifies a node of the simulated network.
using NodeId = std::uint32_t;

using Nonce = std::uint64_t;

/// Simulation time in seconds.
using Time = double;

/// The virtual dropping face. Never a physical face of any node.
inline constexpr FaceId kDropFace = std::numeric_limits<FaceId>::max();

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

} // namespace safsim

#endif // SAFSIM_CORE_COMMON_HPP
