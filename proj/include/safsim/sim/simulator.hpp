#ifndef SAFSIM_SIM_SIMULATOR_HPP
#define SAFSIM_SIM_SIMULATOR_HPP

#include "safsim/core/content-store.hpp"
#include "safsim/core/pit.hpp"
#include "safsim/fw/ompif-strategy.hpp"
#include "safsim/fw/strategy.hpp"
#include "safsim/sim/client-stream.hpp"
#include "safsim/sim/event-queue.hpp"
#include "safsim/sim/failure-schedule.hpp"
#include "safsim/sim/link.hpp"
#include "safsim/sim/metrics.hpp"

#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>

namespace safsim::sim {

struct SimConfig
{
  fw::StrategyParams strategy;
  /// Content Store size of every router; 0 disables caching
  std::uint64_t cacheCapacityBytes = 25'000'000;
  std::uint32_t payloadSize = kDefaultPayloadSize;
  std::uint32_t interestSize = kInterestWireSize;
  std::size_t queueCapacity = 100;
  Time interestLifetime = kDefaultInterestLifetime;
  /// clients stop issuing Interests here; the run continues until all resolve
  Time simTime = 60.0;
  std::vector<ClientStream> clients;
  std::vector<LinkFailure> failures;
  /// run periodic strategy work on all nodes at the same instants
  bool alignPeriods = false;
  bool recordTrace = false;
  std::uint64_t seed = 1;
};

/** \brief Single-threaded discrete-event simulation of one network.
 */
class Simulator : private fw::CacheOracle
{
public:
  Simulator(const topo::Topology& topology, SimConfig config);

  ~Simulator() override;

  /// Processes events up to and including \p until; returns how many ran.
  std::uint64_t
  runUntil(Time until);

  /// Runs until every client Interest is resolved and returns the metrics.
  RunMetrics
  run();

  RunMetrics
  metrics() const;

  Time
  now() const noexcept
  {
    return m_now;
  }

  const std::vector<DecisionRecord>&
  trace() const noexcept
  {
    return m_trace;
  }

  fw::Strategy*
  strategy(NodeId node);

  const ContentStore*
  contentStore(NodeId node) const;

  const std::vector<Fib>&
  fibs() const noexcept
  {
    return m_fibs;
  }

  /// nullptr unless the strategy is OMP-IF
  const fw::OmpIfRegistry*
  ompifRegistry() const noexcept
  {
    return m_ompif.get();
  }

  bool
  isLinkUp(std::size_t edge) const override;

  std::vector<NodeId>
  holders(const Name& name) const override;

  /// Sends a single Interest from \p client now; for tests and tools.
  void
  issueInterest(NodeId client, const Name& name);

private:
  struct InterestArrival
  {
    NodeId node;
    FaceId face;
    Interest interest;
    std::size_t edge;
    std::uint64_t epoch;
  };

  struct DataArrival
  {
    NodeId node;
    FaceId face;
    Data data;
    std::vector<Nonce> nonces;
    std::size_t edge;
    std::uint64_t epoch;
  };

  struct PitExpiry
  {
    NodeId node;
    Name name;
    std::uint64_t entryId;
  };

  struct PeriodBoundary
  {
    NodeId node;
  };

  struct LinkDown
  {
    std::size_t edge;
  };

  struct LinkUp
  {
    std::size_t edge;
  };

  struct ClientRequest
  {
    std::size_t stream;
  };

  struct ClientTimeout
  {
    NodeId client;
    Name name;
    Nonce nonce;
  };

  using Action = std::variant<InterestArrival, DataArrival, PitExpiry, PeriodBoundary,
                              LinkDown, LinkUp, ClientRequest, ClientTimeout>;

  struct LinkState
  {
    int downCount = 0;
    std::uint64_t epoch = 0;
    LinkDirection dir[2];
  };

  struct PendingRequest
  {
    Nonce nonce;
    Time issueTime;
  };

  struct NodeState
  {
    topo::NodeKind kind;
    std::unique_ptr<fw::Strategy> strategy;
    std::unique_ptr<Pit> pit;
    std::unique_ptr<DeadNonceList> deadNonces;
    std::unique_ptr<ContentStore> cs;
    std::unique_ptr<Rng> rng;
    /// face on the neighbour leading back to this node, per local face
    std::vector<FaceId> reverseFace;
    std::unordered_map<Name, std::vector<PendingRequest>, NameHash> pending;
  };

  struct StreamState
  {
    ClientStream stream;
    EmissionClock clock;
    std::uint64_t nextChunk = 0;
  };

  void
  dispatch(Action& action);

  void
  onInterest(InterestArrival& a);

  void
  onData(DataArrival& a);

  void
  onPitExpiry(const PitExpiry& e);

  void
  onPeriod(NodeId node);

  void
  onLinkDown(std::size_t edge);

  void
  onLinkUp(std::size_t edge);

  void
  onClientRequest(std::size_t stream);

  void
  onClientTimeout(const ClientTimeout& t);

  void
  routerInterest(NodeId node, FaceId inFace, const Interest& interest);

  void
  sendInterest(NodeId node, FaceId face, const Interest& interest);

  void
  sendData(NodeId node, FaceId face, const Data& data, std::vector<Nonce> nonces);

  /// queues a packet on the link behind \p face; false if it is lost
  bool
  transmit(NodeId node, FaceId face, std::uint32_t bytes, Time& arrival, std::size_t& edge,
           std::span<const Nonce> nonces, bool isInterest);

  void
  recordDrop(std::span<const Nonce> nonces, DropCause cause);

  void
  cacheInsert(NodeId node, const Data& data);

  const topo::Topology& m_topology;
  SimConfig m_config;
  std::vector<Fib> m_fibs;
  std::unique_ptr<fw::OmpIfRegistry> m_ompif;
  std::vector<NodeState> m_nodes;
  std::vector<LinkState> m_links;
  std::vector<StreamState> m_streams;
  EventQueue<Action> m_events;
  Time m_now = 0.0;
  Time m_periodEnd = 0.0;
  std::uint64_t m_nonceCounter = 0;

  std::unordered_map<Nonce, DropCause> m_firstDrop;
  std::unordered_map<Name, std::vector<NodeId>, NameHash> m_cacheIndex;
  bool m_trackCaches = false;

  RunMetrics m_metrics;
  double m_hopSum = 0.0;
  double m_delaySum = 0.0;
  std::vector<DecisionRecord> m_trace;
};

} // namespace safsim::sim

#endif // SAFSIM_SIM_SIMULATOR_HPP
