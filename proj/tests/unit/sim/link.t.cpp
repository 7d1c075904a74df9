#include "safsim/sim/event-queue.hpp"
#include "safsim/sim/link.hpp"

#include <doctest.h>

#include <string>

using namespace safsim;
using namespace safsim::sim;

TEST_SUITE("event queue") {

TEST_CASE("events run in time order, ties in scheduling order")
{
  EventQueue<std::string> q;
  q.schedule(2.0, "c");
  q.schedule(1.0, "a");
  q.schedule(2.0, "d");
  q.schedule(1.0, "b");
  std::string order;
  while (!q.empty()) {
    order += q.pop().action;
  }
  CHECK(order == "abcd");
}

}

TEST_SUITE("link direction") {

TEST_CASE("serialization plus propagation on an idle link")
{
  LinkDirection link;
  auto first = link.transmit(1.0, 4096, 1e6, 0.005, 100);
  REQUIRE(first);
  CHECK(*first == doctest::Approx(1.0 + 0.032768 + 0.005));
  auto second = link.transmit(1.0, 4096, 1e6, 0.005, 100);
  REQUIRE(second);
  CHECK(*second - *first == doctest::Approx(0.032768));
}

TEST_CASE("a full queue drops the next packet")
{
  LinkDirection link;
  for (int i = 0; i < 100; ++i) {
    REQUIRE(link.transmit(0.0, 4096, 1e6, 0.005, 100));
  }
  CHECK_FALSE(link.transmit(0.0, 4096, 1e6, 0.005, 100));
  // once the head has left there is room again
  CHECK(link.transmit(0.032768, 4096, 1e6, 0.005, 100));
  CHECK(link.backlog(0.032768) == 100);
}

TEST_CASE("an idle link does not carry old backlog")
{
  LinkDirection link;
  link.transmit(0.0, 4096, 1e6, 0.005, 100);
  auto later = link.transmit(10.0, 50, 1e6, 0.005, 100);
  CHECK(*later == doctest::Approx(10.0 + 0.0004 + 0.005));
}

TEST_CASE("reset forgets queued packets")
{
  LinkDirection link;
  for (int i = 0; i < 10; ++i) {
    link.transmit(0.0, 4096, 1e6, 0.005, 100);
  }
  link.reset(0.1);
  CHECK(link.backlog(0.1) == 0);
  CHECK(*link.transmit(0.1, 4096, 1e6, 0.005, 100) == doctest::Approx(0.1 + 0.037768));
}

}
