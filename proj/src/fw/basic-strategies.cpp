#include "safsim/fw/basic-strategies.hpp"

#include <algorithm>
#include <tuple>

namespace safsim::fw {

Decision
BroadcastStrategy::afterReceiveInterest(StrategyContext&, const Interest&,
                                        std::optional<FaceId> inFace, const FibEntry& entry)
{
  Decision d;
  for (const auto& hop : entry.nextHops()) {
    if (!inFace || hop.face != *inFace) {
      d.faces.push_back(hop.face);
    }
  }
  return d;
}

Decision
ShortestRouteStrategy::afterReceiveInterest(StrategyContext&, const Interest&,
                                            std::optional<FaceId> inFace, const FibEntry& entry)
{
  const NextHop* best = nullptr;
  for (const auto& hop : entry.nextHops()) {
    if (inFace && hop.face == *inFace) {
      continue;
    }
    if (best == nullptr || hop.cost < best->cost) {
      best = &hop;
    }
  }
  return best == nullptr ? Decision::drop() : Decision::to(best->face);
}

Decision
DelayRankStrategy::afterReceiveInterest(StrategyContext&, const Interest&,
                                        std::optional<FaceId> inFace, const FibEntry& entry)
{
  const auto& info = m_info[entry.prefix()];
  // rank tuple: (class, delay, cost, face)
  std::optional<std::tuple<int, double, std::uint32_t, FaceId>> best;
  for (const auto& hop : entry.nextHops()) {
    if (inFace && hop.face == *inFace) {
      continue;
    }
    int cls = 1;
    double delay = 0.0;
    auto it = info.find(hop.face);
    if (it != info.end()) {
      if (it->second.consecutiveTimeouts >= 2) {
        cls = 2;
        delay = it->second.delay.value_or(0.0);
      }
      else if (it->second.delay) {
        cls = 0;
        delay = *it->second.delay;
      }
    }
    std::tuple<int, double, std::uint32_t, FaceId> rank{cls, delay, hop.cost, hop.face};
    if (!best || rank < *best) {
      best = rank;
    }
  }
  return best ? Decision::to(std::get<3>(*best)) : Decision::drop();
}

void
DelayRankStrategy::onData(StrategyContext&, const FibEntry& entry, const Name&, FaceId face,
                          double delay, std::uint32_t)
{
  auto& f = m_info[entry.prefix()][face];
  f.delay = f.delay ? (1.0 - m_weight) * *f.delay + m_weight * delay : delay;
  f.consecutiveTimeouts = 0;
}

void
DelayRankStrategy::onTimeout(StrategyContext&, const FibEntry& entry, const Name&, FaceId face)
{
  ++m_info[entry.prefix()][face].consecutiveTimeouts;
}

std::optional<double>
DelayRankStrategy::delay(const Name& prefix, FaceId face) const
{
  auto p = m_info.find(prefix);
  if (p == m_info.end()) {
    return std::nullopt;
  }
  auto f = p->second.find(face);
  return f == p->second.end() ? std::nullopt : f->second.delay;
}

std::map<FaceId, RfaStrategy::FaceInfo>&
RfaStrategy::faces(const FibEntry& entry)
{
  auto& faces = m_info[entry.prefix()];
  for (const auto& hop : entry.nextHops()) {
    faces.try_emplace(hop.face);
  }
  return faces;
}

Decision
RfaStrategy::afterReceiveInterest(StrategyContext& ctx, const Interest&,
                                  std::optional<FaceId> inFace, const FibEntry& entry)
{
  auto& info = faces(entry);
  double total = 0.0;
  for (const auto& [face, f] : info) {
    if (!inFace || face != *inFace) {
      total += f.weight;
    }
  }
  if (total <= 0.0) {
    return Decision::drop();
  }
  double r = (1.0 - ctx.rng.uniform01()) * total;
  double acc = 0.0;
  std::optional<FaceId> chosen;
  for (auto& [face, f] : info) {
    if (inFace && face == *inFace) {
      continue;
    }
    acc += f.weight;
    chosen = face;
    if (r <= acc) {
      break;
    }
  }
  ++info[*chosen].pending;
  return Decision::to(*chosen);
}

void
RfaStrategy::onData(StrategyContext&, const FibEntry& entry, const Name&, FaceId face, double, std::uint32_t)
{
  auto& f = faces(entry)[face];
  f.pending -= f.pending > 0 ? 1 : 0;
}

void
RfaStrategy::onTimeout(StrategyContext&, const FibEntry& entry, const Name&, FaceId face)
{
  auto& f = faces(entry)[face];
  f.pending -= f.pending > 0 ? 1 : 0;
}

void
RfaStrategy::onPeriod(StrategyContext&)
{
  for (auto& [prefix, faces] : m_info) {
    for (auto& [face, f] : faces) {
      f.weight = (1.0 - m_beta) * f.weight + m_beta / (1.0 + f.pending);
    }
  }
}

double
RfaStrategy::weight(const Name& prefix, FaceId face) const
{
  auto p = m_info.find(prefix);
  if (p == m_info.end()) {
    return 1.0;
  }
  auto f = p->second.find(face);
  return f == p->second.end() ? 1.0 : f->second.weight;
}

void
RfaStrategy::setPending(const Name& prefix, FaceId face, std::uint32_t count)
{
  m_info[prefix][face].pending = count;
}

} // namespace safsim::fw
