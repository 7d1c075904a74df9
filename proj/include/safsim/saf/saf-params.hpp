#ifndef SAFSIM_SAF_SAF_PARAMS_HPP
#define SAFSIM_SAF_SAF_PARAMS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace safsim::saf {

/// How the spare capacity of a satisfying face is rounded.
enum class SigmaMode {
  /// whole Interests only: floor(S/t - S - U)
  Floor,
  /// real-valued S/t - S - U
  Real,
};

/// How a fresh column is seeded from the FIB.
enum class InitialTable {
  Uniform,
  /// proportional to 1/cost of each next hop
  CostWeighted,
};

struct SafParams
{
  /// seconds between two updates of a column
  double periodTau = 1.0;
  double tMin = 0.25;
  double tMax = 0.95;
  /// rate of change of the reliability threshold
  double lambda = 0.25;
  /// length of the satisfied-count window used by the stability indicator
  std::size_t windowN = 5;
  /// fixed stability indicator in ]0,1] replacing the variance-based one
  std::optional<double> alphaOverride;
  SigmaMode sigmaMode = SigmaMode::Floor;
  InitialTable initialTable = InitialTable::Uniform;

  /// \throw std::invalid_argument naming every violated constraint
  void
  validate() const;
};

} // namespace safsim::saf

#endif // SAFSIM_SAF_SAF_PARAMS_HPP
