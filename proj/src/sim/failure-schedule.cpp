#include "safsim/sim/failure-schedule.hpp"
#include "safsim/core/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace safsim::sim {

std::vector<LinkFailure>
drawFailures(const topo::Topology& topology, std::uint32_t count, Time simTime, std::uint64_t seed)
{
  std::vector<LinkFailure> failures;
  if (count == 0 || topology.edges().empty()) {
    return failures;
  }
  Rng rng(seed);
  double maxDuration = std::floor(simTime / 10.0);
  for (std::uint32_t i = 0; i < count; ++i) {
    LinkFailure f;
    f.edge = rng.uniformIndex(topology.edges().size());
    f.start = rng.uniformReal(0.0, simTime);
    f.duration = rng.uniformReal(0.0, maxDuration);
    failures.push_back(f);
  }
  return failures;
}

void
validateFailures(const std::vector<LinkFailure>& failures, std::size_t edgeCount, Time simTime)
{
  for (const auto& f : failures) {
    if (f.edge >= edgeCount) {
      throw std::invalid_argument("failure on unknown link " + std::to_string(f.edge));
    }
    if (f.start < 0.0 || f.duration < 0.0 || f.duration > simTime / 10.0) {
      throw std::invalid_argument("failure on link " + std::to_string(f.edge) + " out of range");
    }
  }
}

} // namespace safsim::sim
