#ifndef SAFSIM_SAF_PROBABILITY_COLUMN_HPP
#define SAFSIM_SAF_PROBABILITY_COLUMN_HPP

#include "safsim/core/common.hpp"
#include "safsim/core/fib.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace safsim::saf {

/** \brief One prefix column of the forwarding table: a forwarding probability
 *  per physical face plus the probability of the virtual dropping face.
 *
 *  Physical faces are kept in ascending identifier order, which is also the
 *  order in which face selection walks them.
 */
class ProbabilityColumn
{
public:
  ProbabilityColumn() = default;

  ProbabilityColumn(std::vector<std::pair<FaceId, double>> physical, double dropProbability);

  /// every face gets 1/n, the dropping face 0
  static ProbabilityColumn
  uniform(std::span<const FaceId> faces);

  /// shares proportional to 1/cost, the dropping face 0
  static ProbabilityColumn
  costWeighted(std::span<const NextHop> nextHops);

  const std::vector<FaceId>&
  faces() const noexcept
  {
    return m_faces;
  }

  bool
  hasFace(FaceId face) const noexcept;

  /// probability of \p face; kDropFace addresses the dropping face, unknown faces yield 0
  double
  get(FaceId face) const noexcept;

  /// \throw std::out_of_range for a face not in the column
  void
  set(FaceId face, double p);

  double
  drop() const noexcept
  {
    return m_drop;
  }

  void
  setDrop(double p) noexcept
  {
    m_drop = p;
  }

  /// sum over physical faces and the dropping face
  double
  sum() const noexcept;

  std::string
  toString() const;

private:
  std::size_t
  indexOf(FaceId face) const noexcept;

  std::vector<FaceId> m_faces;
  std::vector<double> m_probs;
  double m_drop = 0.0;
};

} // namespace safsim::saf

#endif // SAFSIM_SAF_PROBABILITY_COLUMN_HPP
