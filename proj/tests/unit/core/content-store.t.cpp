#include "safsim/core/content-store.hpp"
#include "safsim/core/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <list>

using namespace safsim;

static Data
chunk(const std::string& uri, std::uint32_t size = 4096)
{
  return Data{Name::parse(uri), size, 0};
}

TEST_SUITE("ContentStore") {

TEST_CASE("least recently used entry is evicted first")
{
  ContentStore cs(8192);
  CHECK(cs.insert(chunk("/A")).empty());
  CHECK(cs.insert(chunk("/B")).empty());

  SUBCASE("plain insertion order")
  {
    CHECK(cs.insert(chunk("/C")) == std::vector<Name>{Name::parse("/A")});
  }
  SUBCASE("lookup refreshes recency")
  {
    CHECK(cs.lookup(Name::parse("/A")).has_value());
    CHECK(cs.insert(chunk("/C")) == std::vector<Name>{Name::parse("/B")});
  }
}

TEST_CASE("re-inserting a name does not duplicate it")
{
  ContentStore cs(8192);
  cs.insert(chunk("/A"));
  cs.insert(chunk("/A"));
  CHECK(cs.size() == 1);
  CHECK(cs.insert(chunk("/B")).empty());
  CHECK(cs.usedBytes() == 8192);
}

TEST_CASE("lookup is exact-name and counts hits")
{
  ContentStore cs(1 << 20);
  cs.insert(chunk("/a/1"));
  CHECK(cs.lookup(Name::parse("/a/1")).has_value());
  CHECK_FALSE(cs.lookup(Name::parse("/a/2")).has_value());
  CHECK_FALSE(cs.lookup(Name::parse("/a")).has_value());
  CHECK(cs.hits() == 1);
  CHECK(cs.misses() == 2);

  ContentStore cs2(1 << 20);
  cs2.insert(chunk("/x"));
  for (int i = 0; i < 3; ++i) {
    cs2.lookup(Name::parse("/x"));
  }
  cs2.lookup(Name::parse("/y"));
  CHECK(cs2.hitRatio() == doctest::Approx(0.75));
}

TEST_CASE("oversized objects are a configuration error")
{
  ContentStore cs(1000);
  CHECK_THROWS_AS(cs.insert(chunk("/big", 4096)), ContentStore::OversizedObject);
}

TEST_CASE("matches a reference list model under random operations")
{
  Rng rng(3);
  const std::uint64_t capacity = 20000;
  ContentStore cs(capacity);
  // front = most recent
  std::list<std::pair<std::string, std::uint32_t>> model;

  for (int step = 0; step < 3000; ++step) {
    std::string name = "/n/" + std::to_string(rng.uniformIndex(40));
    if (rng.uniform01() < 0.6) {
      auto size = static_cast<std::uint32_t>(500 + rng.uniformIndex(4000));
      model.remove_if([&] (const auto& e) { return e.first == name; });
      model.emplace_front(name, size);
      std::uint64_t used = 0;
      for (const auto& e : model) {
        used += e.second;
      }
      std::vector<Name> expectedEvicted;
      while (used > capacity) {
        used -= model.back().second;
        expectedEvicted.push_back(Name::parse(model.back().first));
        model.pop_back();
      }
      REQUIRE(cs.insert(Data{Name::parse(name), size, 0}) == expectedEvicted);
    }
    else {
      auto it = std::find_if(model.begin(), model.end(), [&] (const auto& e) { return e.first == name; });
      bool hit = cs.lookup(Name::parse(name)).has_value();
      REQUIRE(hit == (it != model.end()));
      if (it != model.end()) {
        model.splice(model.begin(), model, it);
      }
    }
    REQUIRE(cs.usedBytes() <= capacity);
    std::vector<Name> order;
    for (const auto& e : model) {
      order.push_back(Name::parse(e.first));
    }
    REQUIRE(cs.recencyOrder() == order);
  }
}

}
