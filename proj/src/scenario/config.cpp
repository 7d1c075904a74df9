#include "safsim/scenario/config.hpp"
#include "safsim/core/random.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>

namespace safsim::scenario {

namespace {

constexpr std::uint64_t kPlacementStream = 3;

std::string
trim(std::string_view s)
{
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string
joinProblems(const std::vector<std::string>& problems)
{
  std::string out = "invalid scenario:";
  for (const auto& p : problems) {
    out += "\n  " + p;
  }
  return out;
}

/// Parses one value and stores it; throws std::invalid_argument with a reason.
using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

template<typename T>
T
parseNumber(const std::string& text)
{
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("'" + text + "' is not a valid number");
  }
  return value;
}

bool
parseBool(const std::string& text)
{
  if (text == "true" || text == "yes" || text == "1") {
    return true;
  }
  if (text == "false" || text == "no" || text == "0") {
    return false;
  }
  throw std::invalid_argument("'" + text + "' is not a boolean");
}

template<typename T, typename Member>
Setter
number(Member member)
{
  return [member] (ScenarioConfig& c, const std::string& v) { std::invoke(member, c) = parseNumber<T>(v); };
}

const std::map<std::string, std::map<std::string, Setter>>&
schema()
{
  static const std::map<std::string, std::map<std::string, Setter>> table{
    {"topology", {
      {"file", [] (ScenarioConfig& c, const std::string& v) { c.topologyFile = v; }},
      {"as_count", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.asCount; })},
      {"routers_per_as", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.routersPerAs; })},
      {"extra_edges_top", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.extraEdgesTop; })},
      {"extra_edges_bottom",
       number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.extraEdgesBottom; })},
      {"connectivity", [] (ScenarioConfig& c, const std::string& v) {
        c.connectivity = topo::parseConnectivityClass(v);
      }},
      {"vary_graph", [] (ScenarioConfig& c, const std::string& v) { c.varyGraph = parseBool(v); }},
      {"bandwidth", [] (ScenarioConfig& c, const std::string& v) {
        c.topology.bandwidth = topo::parseBandwidthClass(v);
      }},
      {"clients", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.clientCount; })},
      {"servers", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.topology.serverCount; })},
      {"propagation_delay",
       number<double>([] (ScenarioConfig& c) -> auto& { return c.topology.propagationDelay; })},
    }},
    {"strategy", {
      {"name", [] (ScenarioConfig& c, const std::string& v) { c.strategy.name = v; }},
      {"period_tau", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.saf.periodTau; })},
      {"t_min", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.saf.tMin; })},
      {"t_max", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.saf.tMax; })},
      {"lambda", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.saf.lambda; })},
      {"window_n", number<std::size_t>([] (ScenarioConfig& c) -> auto& { return c.strategy.saf.windowN; })},
      {"alpha_override", [] (ScenarioConfig& c, const std::string& v) {
        c.strategy.saf.alphaOverride = parseNumber<double>(v);
      }},
      {"sigma_mode", [] (ScenarioConfig& c, const std::string& v) {
        if (v == "floor") {
          c.strategy.saf.sigmaMode = saf::SigmaMode::Floor;
        }
        else if (v == "real") {
          c.strategy.saf.sigmaMode = saf::SigmaMode::Real;
        }
        else {
          throw std::invalid_argument("expected floor or real");
        }
      }},
      {"initial_table", [] (ScenarioConfig& c, const std::string& v) {
        if (v == "uniform") {
          c.strategy.saf.initialTable = saf::InitialTable::Uniform;
        }
        else if (v == "cost") {
          c.strategy.saf.initialTable = saf::InitialTable::CostWeighted;
        }
        else {
          throw std::invalid_argument("expected uniform or cost");
        }
      }},
      {"rfa_beta", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.rfaBeta; })},
      {"rfa_interval", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.rfaInterval; })},
      {"ompif_probe_interval",
       number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.ompifProbeInterval; })},
      {"delay_rank_ewma", number<double>([] (ScenarioConfig& c) -> auto& { return c.strategy.delayRankEwma; })},
    }},
    {"workload", {
      {"request_rate", number<double>([] (ScenarioConfig& c) -> auto& { return c.requestRate; })},
      {"popularity", [] (ScenarioConfig& c, const std::string& v) {
        if (v == "uniform") {
          c.popularity = Popularity::Uniform;
        }
        else if (v == "zipf") {
          c.popularity = Popularity::Zipf;
        }
        else {
          throw std::invalid_argument("expected uniform or zipf");
        }
      }},
      {"zipf_alpha", number<double>([] (ScenarioConfig& c) -> auto& { return c.zipfAlpha; })},
      {"cache_capacity_bytes", number<std::uint64_t>([] (ScenarioConfig& c) -> auto& { return c.cacheCapacityBytes; })},
      {"payload_size", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.payloadSize; })},
      {"interest_lifetime", number<double>([] (ScenarioConfig& c) -> auto& { return c.interestLifetime; })},
      {"max_start_offset", number<double>([] (ScenarioConfig& c) -> auto& { return c.maxStartOffset; })},
    }},
    {"run", {
      {"sim_time", number<double>([] (ScenarioConfig& c) -> auto& { return c.simTime; })},
      {"runs", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.runs; })},
      {"seed", number<std::uint64_t>([] (ScenarioConfig& c) -> auto& { return c.seed; })},
      {"link_failures", number<std::uint32_t>([] (ScenarioConfig& c) -> auto& { return c.linkFailures; })},
      {"queue_capacity", number<std::size_t>([] (ScenarioConfig& c) -> auto& { return c.queueCapacity; })},
      {"align_periods", [] (ScenarioConfig& c, const std::string& v) { c.alignPeriods = parseBool(v); }},
    }},
  };
  return table;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& field, const std::string& what)
  : std::runtime_error("line " + std::to_string(line) + (field.empty() ? "" : " (" + field + ")") + ": " + what)
  , m_line(line)
  , m_field(field)
{
}

ValidationError::ValidationError(std::vector<std::string> problems)
  : std::invalid_argument(joinProblems(problems))
  , m_problems(std::move(problems))
{
}

void
ScenarioConfig::validate() const
{
  std::vector<std::string> problems;
  auto require = [&problems] (bool ok, std::string what) {
    if (!ok) {
      problems.push_back(std::move(what));
    }
  };
  require(simTime > 0.0, "sim_time must be positive");
  require(runs >= 1, "runs must be at least 1");
  require(zipfAlpha > 0.0, "zipf_alpha must be positive");
  require(requestRate >= 0.0, "request_rate must not be negative");
  require(payloadSize > 0, "payload_size must be positive");
  require(interestLifetime > 0.0, "interest_lifetime must be positive");
  require(maxStartOffset >= 0.0, "max_start_offset must not be negative");
  require(queueCapacity >= 1, "queue_capacity must be at least 1");
  if (!topologyFile) {
    try {
      auto spec = topologySpec(seed);
      spec.validate();
      spec.checkFeasible();
    }
    catch (const std::invalid_argument& e) {
      problems.push_back(std::string("topology: ") + e.what());
    }
  }
  try {
    strategy.validate();
  }
  catch (const std::invalid_argument& e) {
    problems.push_back(std::string("strategy: ") + e.what());
  }
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
}

topo::TopologySpec
ScenarioConfig::topologySpec(std::uint64_t runSeed) const
{
  auto spec = topology;
  spec.seed = varyGraph ? runSeed : seed;
  spec.placementSeed = mixSeed(runSeed, kPlacementStream);
  if (connectivity) {
    spec.applyConnectivity(*connectivity);
  }
  return spec;
}

std::uint64_t
ScenarioConfig::catalogueSize(std::size_t serverCount) const
{
  double chunks = static_cast<double>(cacheCapacityBytes) * 100.0 /
                  (static_cast<double>(payloadSize) * static_cast<double>(std::max<std::size_t>(serverCount, 1)));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(chunks));
}

ScenarioConfig
parseConfig(std::istream& in, const std::filesystem::path& baseDir)
{
  ScenarioConfig config;
  const std::map<std::string, Setter>* section = nullptr;
  std::string sectionName;
  std::map<std::string, std::size_t> seen;
  std::string raw;
  std::size_t lineNo = 0;

  while (std::getline(in, raw)) {
    ++lineNo;
    auto comment = raw.find_first_of("#;");
    std::string line = trim(std::string_view(raw).substr(0, comment));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(lineNo, "", "unterminated section header");
      }
      sectionName = trim(std::string_view(line).substr(1, line.size() - 2));
      auto it = schema().find(sectionName);
      if (it == schema().end()) {
        throw ParseError(lineNo, sectionName, "unknown section");
      }
      section = &it->second;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineNo, "", "expected key = value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (section == nullptr) {
      throw ParseError(lineNo, key, "key outside of any section");
    }
    std::string field = sectionName + "." + key;
    auto setter = section->find(key);
    if (setter == section->end()) {
      throw ParseError(lineNo, field, "unknown key");
    }
    if (auto [it, fresh] = seen.emplace(field, lineNo); !fresh) {
      throw ParseError(lineNo, field, "duplicate key, first set on line " + std::to_string(it->second));
    }
    if (value.empty()) {
      throw ParseError(lineNo, field, "missing value");
    }
    try {
      setter->second(config, value);
    }
    catch (const std::invalid_argument& e) {
      throw ParseError(lineNo, field, e.what());
    }
  }

  if (config.topologyFile && config.topologyFile->is_relative() && !baseDir.empty()) {
    config.topologyFile = baseDir / *config.topologyFile;
  }
  config.validate();
  return config;
}

ScenarioConfig
loadConfig(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  return parseConfig(in, path.parent_path());
}

} // namespace safsim::scenario
