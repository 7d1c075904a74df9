#include "safsim/saf/update.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace safsim::saf {

namespace {

// Probability mass below this is treated as zero so that rounding residue
// never keeps a column in the shifting branch.
constexpr double kMassEpsilon = 1e-12;

// Slack for floor() on counts that are integral up to rounding.
constexpr double kFloorSlack = 1e-9;

void
renormalize(ProbabilityColumn& column)
{
  for (auto f : column.faces()) {
    if (column.get(f) < 0.0) {
      column.set(f, 0.0);
    }
  }
  double residual = 1.0 - column.sum();
  double drop = column.drop() + residual;
  if (drop < kMassEpsilon) {
    drop = 0.0;
  }
  column.setDrop(drop);

  double sum = column.sum();
  if (sum <= 0.0) {
    column.setDrop(1.0);
    return;
  }
  for (auto f : column.faces()) {
    column.set(f, column.get(f) / sum);
  }
  column.setDrop(column.drop() / sum);
}

} // namespace

void
SafParams::validate() const
{
  std::string problems;
  auto require = [&problems] (bool ok, const char* what) {
    if (!ok) {
      problems += problems.empty() ? "" : "; ";
      problems += what;
    }
  };
  require(periodTau > 0.0, "period_tau must be positive");
  require(tMin > 0.0 && tMin < 1.0, "t_min must lie in ]0,1[");
  require(tMax > 0.0 && tMax < 1.0, "t_max must lie in ]0,1[");
  require(tMin < tMax, "t_min must be smaller than t_max");
  require(lambda > 0.0 && lambda < 1.0, "lambda must lie in ]0,1[");
  require(windowN >= 1, "window_n must be at least 1");
  require(!alphaOverride || (*alphaOverride > 0.0 && *alphaOverride <= 1.0), "alpha_override must lie in ]0,1]");
  if (!problems.empty()) {
    throw std::invalid_argument(problems);
  }
}

FaceId
selectFace(const ProbabilityColumn& column, std::optional<FaceId> inFace, double r)
{
  double limit = 0.0;
  for (auto face : column.faces()) {
    if (inFace && face == *inFace) {
      continue;
    }
    limit += column.get(face);
    if (r <= limit) {
      return face;
    }
  }
  return kDropFace;
}

FaceId
selectFace(const ProbabilityColumn& column, std::optional<FaceId> inFace, Rng& rng)
{
  double upper = 1.0 - (inFace ? column.get(*inFace) : 0.0);
  if (upper <= 0.0) {
    return kDropFace;
  }
  double r = (1.0 - rng.uniform01()) * upper;
  return selectFace(column, inFace, r);
}

double
computeAlpha(std::span<const double> history, std::size_t window)
{
  if (history.empty() || window == 0) {
    return 1.0;
  }
  auto n = std::min(window, history.size());
  auto samples = history.subspan(history.size() - n);
  double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
  double var = 0.0;
  for (auto x : samples) {
    var += (x - mean) * (x - mean);
  }
  var /= static_cast<double>(n);
  return 1.0 / (1.0 + std::sqrt(var));
}

FacePartition
partitionFaces(const PeriodStats& stats, std::span<const FaceId> faces, double threshold)
{
  FacePartition part;
  for (auto f : faces) {
    if (stats.reliability(f) >= threshold) {
      part.reliable.push_back(f);
      if (stats.satisfiedFraction(f) + stats.unsatisfiedFraction(f) > 0.0) {
        part.satisfying.push_back(f);
      }
      else {
        part.probing.push_back(f);
      }
    }
    else {
      part.unreliable.push_back(f);
    }
  }
  return part;
}

double
computeSigma(double satisfied, double unsatisfied, double threshold, SigmaMode mode)
{
  double room = satisfied / threshold - satisfied - unsatisfied;
  if (mode == SigmaMode::Floor) {
    room = std::floor(room + kFloorSlack);
  }
  return std::max(0.0, room);
}

double
probe(ProbabilityColumn& column, const PeriodStats& stats, std::span<const FaceId> probingFaces)
{
  if (probingFaces.empty()) {
    return 0.0;
  }
  double satisfiedPhysical = 0.0;
  for (auto f : column.faces()) {
    satisfiedPhysical += stats.satisfiedFraction(f);
  }
  double rho = std::clamp(1.0 - satisfiedPhysical, 0.0, 1.0);
  double amount = column.drop() * rho;
  double share = amount / static_cast<double>(probingFaces.size());
  for (auto f : probingFaces) {
    column.set(f, column.get(f) + share);
  }
  column.setDrop(column.drop() - amount);
  return amount;
}

double
adjustThreshold(double threshold, ThresholdDirection direction, const SafParams& params)
{
  if (direction == ThresholdDirection::Increase) {
    return std::min(params.tMax, (1.0 - params.lambda) * threshold + params.lambda * params.tMax);
  }
  // the recurrence can undershoot t_min
  return std::clamp((1.0 - params.lambda) * threshold - params.lambda * params.tMin, params.tMin, params.tMax);
}

int
convergenceBound(std::span<const UnreliableFaceLoad> faces, double demand, double threshold, double alpha)
{
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in ]0,1]");
  }
  int bound = 0;
  for (const auto& face : faces) {
    double target = face.capacity / threshold - face.capacity;
    double start = face.initialProbability * demand - face.capacity;
    if (alpha == 1.0) {
      // ln(1 - alpha) diverges: the whole surplus goes in one step
      bound = std::max(bound, 1);
      continue;
    }
    if (target <= 0.0 || start <= 0.0) {
      throw DomainError("convergence bound undefined: non-positive logarithm argument");
    }
    double n = std::ceil((std::log(target) - std::log(start)) / std::log(1.0 - alpha));
    bound = std::max(bound, static_cast<int>(std::max(0.0, n)));
  }
  return bound;
}

UpdateReport
applyPeriodUpdate(ProbabilityColumn& column, double& threshold, PeriodStats& stats, const SafParams& params)
{
  UpdateReport report;
  report.thresholdBefore = threshold;

  const std::vector<FaceId> faces = column.faces();
  for (auto f : faces) {
    stats.registerFace(f);
  }

  report.total = stats.total();
  report.partition = partitionFaces(stats, faces, threshold);
  const auto& part = report.partition;

  // relaxed unsatisfied traffic, one removal per unreliable face
  std::map<FaceId, double> removal;
  if (report.total > 0.0) {
    for (auto f : part.unreliable) {
      double alpha = 1.0;
      if (params.alphaOverride) {
        alpha = *params.alphaOverride;
      }
      else {
        auto history = stats.history(f);
        history.push_back(stats.satisfied(f));
        alpha = computeAlpha(history, params.windowN);
      }
      report.alpha[f] = alpha;
      // sampled traffic can report more unsatisfied Interests than the
      // current probability still carries; never remove more than is there
      double r = std::min(column.get(f), stats.unsatisfiedFraction(f) * alpha);
      removal[f] = r;
      report.delta += r;
    }
  }

  report.gamma = report.delta + column.drop();
  if (report.gamma <= kMassEpsilon) {
    report.gamma = 0.0;
  }

  if (report.gamma > 0.0) {
    report.branch = UpdateBranch::Shift;
    report.massRemoved = report.gamma;

    for (const auto& [f, r] : removal) {
      column.set(f, column.get(f) - r);
    }

    double sigmaSum = 0.0;
    std::map<FaceId, double> sigma;
    for (auto f : part.satisfying) {
      double s = computeSigma(stats.satisfied(f), stats.unsatisfied(f), threshold, params.sigmaMode);
      sigma[f] = s;
      sigmaSum += s;
      report.sigmaShare[f] = report.total > 0.0 ? s / report.total : 0.0;
    }

    report.gammaPrime = report.total > 0.0 ? std::min(sigmaSum / report.total, report.gamma) : 0.0;
    if (sigmaSum > 0.0) {
      for (const auto& [f, s] : sigma) {
        column.set(f, column.get(f) + report.gammaPrime * s / sigmaSum);
      }
    }
    else {
      report.gammaPrime = 0.0;
    }

    column.setDrop(report.gamma - report.gammaPrime);
    report.massAdded = report.gammaPrime + column.drop();

    if (column.drop() > kMassEpsilon) {
      report.probe = probe(column, stats, part.probing);
      if (!part.probing.empty()) {
        double satisfiedPhysical = 0.0;
        for (auto f : faces) {
          satisfiedPhysical += stats.satisfiedFraction(f);
        }
        report.rho = std::clamp(1.0 - satisfiedPhysical, 0.0, 1.0);
      }
      if (column.drop() > 1.0 - threshold) {
        threshold = adjustThreshold(threshold, ThresholdDirection::Decrease, params);
      }
    }
  }
  else if (report.total > 0.0) {
    report.branch = UpdateBranch::Tighten;
    threshold = adjustThreshold(threshold, ThresholdDirection::Increase, params);
  }

  renormalize(column);
  report.thresholdAfter = threshold;
  stats.closePeriod();
  return report;
}

} // namespace safsim::saf
