#ifndef SAFSIM_SAF_FORWARDING_TABLE_HPP
#define SAFSIM_SAF_FORWARDING_TABLE_HPP

#include "safsim/core/fib.hpp"
#include "safsim/core/name.hpp"
#include "safsim/saf/period-stats.hpp"
#include "safsim/saf/probability-column.hpp"
#include "safsim/saf/saf-params.hpp"
#include "safsim/saf/update.hpp"

#include <map>

namespace safsim::saf {

/// Per-prefix state: probability column, reliability threshold, statistics.
struct ColumnState
{
  ProbabilityColumn column;
  double threshold = 0.0;
  PeriodStats stats;
};

/** \brief The forwarding table of one node: one column per content prefix.
 */
class ForwardingTable
{
public:
  explicit
  ForwardingTable(SafParams params);

  const SafParams&
  params() const noexcept
  {
    return m_params;
  }

  /// Column for \p entry's prefix, created from its next hops on first use.
  ColumnState&
  column(const FibEntry& entry);

  ColumnState*
  find(const Name& prefix);

  const ColumnState*
  find(const Name& prefix) const;

  /// Runs the period update on every column.
  void
  updateAll();

  const std::map<Name, ColumnState>&
  columns() const noexcept
  {
    return m_columns;
  }

private:
  SafParams m_params;
  std::map<Name, ColumnState> m_columns;
};

} // namespace safsim::saf

#endif // SAFSIM_SAF_FORWARDING_TABLE_HPP
