#ifndef SAFSIM_SCENARIO_CONFIG_HPP
#define SAFSIM_SCENARIO_CONFIG_HPP

#include "safsim/fw/strategy.hpp"
#include "safsim/topology/generator.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace safsim::scenario {

enum class Popularity {
  Uniform,
  Zipf,
};

/// Syntax problem in a config file.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, const std::string& field, const std::string& what);

  std::size_t
  line() const noexcept
  {
    return m_line;
  }

  const std::string&
  field() const noexcept
  {
    return m_field;
  }

private:
  std::size_t m_line;
  std::string m_field;
};

/// A well-formed config that violates one or more constraints.
class ValidationError : public std::invalid_argument
{
public:
  explicit
  ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>&
  problems() const noexcept
  {
    return m_problems;
  }

private:
  std::vector<std::string> m_problems;
};

struct ScenarioConfig
{
  /// load the topology from this file instead of generating it
  std::optional<std::filesystem::path> topologyFile;
  /// generator input; its seeds are set per run
  topo::TopologySpec topology;
  /// draw a new router graph for every run instead of one per scenario
  bool varyGraph = false;
  /// when set, overrides both extra edge counts of the generator
  std::optional<topo::ConnectivityClass> connectivity;

  fw::StrategyParams strategy;

  double simTime = 60.0;
  /// Interests per second and client
  double requestRate = 30.0;
  Popularity popularity = Popularity::Uniform;
  double zipfAlpha = 0.668;
  std::uint64_t cacheCapacityBytes = 25'000'000;
  std::uint32_t payloadSize = 4096;
  double interestLifetime = 2.0;
  /// latest client start offset; also capped at half the simulation time
  double maxStartOffset = 30.0;

  std::size_t queueCapacity = 100;
  std::uint32_t linkFailures = 0;
  bool alignPeriods = false;
  std::uint32_t runs = 1;
  std::uint64_t seed = 1;

  /// \throw ValidationError listing every violated constraint
  void
  validate() const;

  /** \brief Generator input for the run with seed \p runSeed.
   *
   *  The router graph comes from the scenario seed unless varyGraph is set;
   *  client and server placement always comes from the run seed.
   */
  topo::TopologySpec
  topologySpec(std::uint64_t runSeed) const;

  /// Chunks per server so that one cache holds about 1% of all content.
  std::uint64_t
  catalogueSize(std::size_t serverCount) const;
};

/** \brief Reads a scenario from an INI-style text.
 *
 *  Sections are [topology], [strategy], [workload] and [run]; lines are
 *  `key = value`, `#` and `;` start comments. Unknown sections and keys are
 *  rejected. A relative topology file is resolved against \p baseDir.
 *  \throw ParseError, ValidationError
 */
ScenarioConfig
parseConfig(std::istream& in, const std::filesystem::path& baseDir = {});

/// \throw ParseError, ValidationError, std::runtime_error if unreadable
ScenarioConfig
loadConfig(const std::filesystem::path& path);

} // namespace safsim::scenario

#endif // SAFSIM_SCENARIO_CONFIG_HPP
