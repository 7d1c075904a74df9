#include "safsim/scenario/workload.hpp"
#include "safsim/core/random.hpp"

#include <algorithm>
#include <cmath>

namespace safsim::scenario {

std::vector<double>
zipfShares(std::size_t n, double alpha)
{
  std::vector<double> shares(n);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    shares[k] = 1.0 / std::pow(static_cast<double>(k + 1), alpha);
    sum += shares[k];
  }
  for (auto& s : shares) {
    s /= sum;
  }
  return shares;
}

std::vector<sim::ClientStream>
generateWorkload(const ScenarioConfig& config, const topo::Topology& topology, std::uint64_t seed)
{
  const auto& prefixes = topology.prefixes();
  if (prefixes.empty()) {
    throw std::invalid_argument("topology has no content prefix");
  }
  Rng rng(seed);
  std::vector<double> cumulative;
  if (config.popularity == Popularity::Zipf) {
    auto shares = zipfShares(prefixes.size(), config.zipfAlpha);
    double acc = 0.0;
    for (auto s : shares) {
      cumulative.push_back(acc += s);
    }
  }

  const double latestStart = std::min(config.maxStartOffset, config.simTime / 2.0);
  const auto catalogue = config.catalogueSize(prefixes.size());
  std::vector<sim::ClientStream> streams;
  for (auto client : topology.nodesOfKind(topo::NodeKind::Client)) {
    sim::ClientStream s;
    s.client = client;
    s.start = rng.uniformReal(0.0, latestStart);
    std::size_t target = 0;
    if (cumulative.empty()) {
      target = rng.uniformIndex(prefixes.size());
    }
    else {
      double r = rng.uniform01();
      target = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
      target = std::min(target, prefixes.size() - 1);
    }
    s.prefix = prefixes[target].prefix;
    s.rate = config.requestRate;
    s.catalogueSize = catalogue;
    s.seed = rng.next();
    streams.push_back(std::move(s));
  }
  return streams;
}

} // namespace safsim::scenario
