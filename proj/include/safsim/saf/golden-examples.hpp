#ifndef SAFSIM_SAF_GOLDEN_EXAMPLES_HPP
#define SAFSIM_SAF_GOLDEN_EXAMPLES_HPP

#include "safsim/saf/split-harness.hpp"

#include <string>
#include <vector>

namespace safsim::saf {

/// Column and update intermediates after one replayed period.
struct ReplayedPeriod
{
  ProbabilityColumn column;
  UpdateReport report;
};

/** \brief Demand per period used by both replays.
 *
 *  189 = 27 * 7 makes every per-face Interest count of the two scenarios
 *  integral, so floor-rounded sigma works on whole Interests.
 */
inline constexpr double kReplayDemand = 189.0;

/** \brief Router with faces F0, F1, F2 where F2's link fails.
 *
 *  Starts from {F1: 1/3, F2: 2/3} with t = 0.99 and alpha = 1. F2 is dead from
 *  the first period on, F0 is an idle alternative path, and in period 4 F1
 *  can only carry 63 Interests. The threshold is scripted to 0.75 after
 *  period 1 and 0.85 after period 3.
 */
std::vector<ReplayedPeriod>
replayLinkFailureExample();

/** \brief Router with faces F0, F1, F2 where F0 satisfies nothing.
 *
 *  Starts uniform with t = 0.5, lambda = 0.25, alpha = 1; F1 carries at most
 *  63 and F2 at most 126 Interests per period. Runs \p periods updates.
 */
std::vector<ReplayedPeriod>
replayCapacityExample(int periods);

/// Result line of one golden check.
struct GoldenCheck
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays both examples and compares against the expected columns.
std::vector<GoldenCheck>
checkGoldenExamples();

} // namespace safsim::saf

#endif // SAFSIM_SAF_GOLDEN_EXAMPLES_HPP
