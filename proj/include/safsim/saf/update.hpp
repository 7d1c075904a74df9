#ifndef SAFSIM_SAF_UPDATE_HPP
#define SAFSIM_SAF_UPDATE_HPP

#include "safsim/core/random.hpp"
#include "safsim/saf/period-stats.hpp"
#include "safsim/saf/probability-column.hpp"
#include "safsim/saf/saf-params.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace safsim::saf {

/** \brief Inverse transform sampling over a column.
 *
 *  \p r must lie in ]0, 1 - p(inFace)]. Physical faces other than \p inFace are
 *  walked in ascending order accumulating their probabilities; the first face
 *  whose running sum reaches \p r is returned, kDropFace if none does.
 */
FaceId
selectFace(const ProbabilityColumn& column, std::optional<FaceId> inFace, double r);

/// Draws r uniformly from ]0, 1 - p(inFace)] and selects a face with it.
FaceId
selectFace(const ProbabilityColumn& column, std::optional<FaceId> inFace, Rng& rng);

/// 1 / (1 + stddev) over the last \p window samples (population variance).
double
computeAlpha(std::span<const double> history, std::size_t window);

struct FacePartition
{
  /// F_R: R >= t
  std::vector<FaceId> reliable;
  /// F_U: the remaining physical faces
  std::vector<FaceId> unreliable;
  /// F_S: reliable faces that carried traffic this period
  std::vector<FaceId> satisfying;
  /// F_P: reliable faces without traffic, used for probing
  std::vector<FaceId> probing;
};

FacePartition
partitionFaces(const PeriodStats& stats, std::span<const FaceId> faces, double threshold);

/// Additional Interests a satisfying face can take before its reliability drops below t.
double
computeSigma(double satisfied, double unsatisfied, double threshold, SigmaMode mode);

/** \brief Moves a share rho of the dropping-face probability to the probing faces.
 *
 *  rho = 1 - sum of ST over physical faces. The share is split evenly over
 *  \p probingFaces; nothing happens when that set is empty.
 *  \return the probability mass moved
 */
double
probe(ProbabilityColumn& column, const PeriodStats& stats, std::span<const FaceId> probingFaces);

enum class ThresholdDirection {
  Increase,
  Decrease,
};

/// Moves t towards t_max, or away from it clamped into [t_min, t_max].
double
adjustThreshold(double threshold, ThresholdDirection direction, const SafParams& params);

class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

struct UnreliableFaceLoad
{
  /// forwarding probability at the start
  double initialProbability;
  /// Interests per period the face can satisfy
  double capacity;
};

/** \brief Upper bound on the periods needed until no face is unreliable,
 *  for constant demand \p demand per period and stability indicator \p alpha.
 *
 *  \throw DomainError if a logarithm argument is not positive
 */
int
convergenceBound(std::span<const UnreliableFaceLoad> faces, double demand, double threshold, double alpha);

enum class UpdateBranch {
  /// Gamma > 0: probabilities shifted
  Shift,
  /// Gamma == 0 and I > 0: threshold raised
  Tighten,
  /// no resolved traffic and nothing dropped
  Idle,
};

/// Intermediate values of one column update, for inspection and tests.
struct UpdateReport
{
  UpdateBranch branch = UpdateBranch::Idle;
  double total = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  double gammaPrime = 0.0;
  double rho = 0.0;
  double probe = 0.0;
  FacePartition partition;
  std::map<FaceId, double> alpha;
  /// sigma / I of every satisfying face
  std::map<FaceId, double> sigmaShare;
  double thresholdBefore = 0.0;
  double thresholdAfter = 0.0;
  /// probability taken from unreliable faces and the dropping face
  double massRemoved = 0.0;
  /// probability given to satisfying, probing and dropping faces
  double massAdded = 0.0;
};

/** \brief Closes a period for one column: shifts probability away from
 *  unreliable faces, parks what cannot be shifted on the dropping face,
 *  probes idle faces, adapts the reliability threshold, and finally resets
 *  the period counters.
 */
UpdateReport
applyPeriodUpdate(ProbabilityColumn& column, double& threshold, PeriodStats& stats, const SafParams& params);

} // namespace safsim::saf

#endif // SAFSIM_SAF_UPDATE_HPP
