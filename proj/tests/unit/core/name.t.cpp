#include "safsim/core/name.hpp"
#include "safsim/core/random.hpp"

#include <doctest.h>

using safsim::Name;

TEST_SUITE("Name") {

TEST_CASE("parse and print")
{
  auto n = Name::parse("/server3/obj17/chunk5");
  CHECK(n.size() == 3);
  CHECK(n.at(1) == "obj17");
  CHECK(n.toUri() == "/server3/obj17/chunk5");
  CHECK(Name::parse("/").empty());
  CHECK(Name::parse("/").toUri() == "/");
}

TEST_CASE("malformed names are rejected")
{
  CHECK_THROWS_AS(Name::parse(""), Name::Error);
  CHECK_THROWS_AS(Name::parse("a/b"), Name::Error);
  CHECK_THROWS_AS(Name::parse("/a//b"), Name::Error);
  CHECK_THROWS_AS(Name::parse("/a/"), Name::Error);
  CHECK_THROWS_AS(Name({"a", ""}), Name::Error);
  CHECK_THROWS_AS(Name::parse("/a").append("x/y"), Name::Error);
}

TEST_CASE("prefix relations")
{
  auto n = Name::parse("/s1/video/c1");
  CHECK(n.getPrefix(2) == Name::parse("/s1/video"));
  CHECK(n.getPrefix(10) == n);
  CHECK(Name::parse("/s1").isPrefixOf(n));
  CHECK(Name().isPrefixOf(n));
  CHECK_FALSE(Name::parse("/s1/vid").isPrefixOf(n));
  CHECK_FALSE(n.isPrefixOf(Name::parse("/s1")));
}

TEST_CASE("parse after print is the identity on random names")
{
  safsim::Rng rng(7);
  const std::string alphabet = "abcxyz019_-.";
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> components(1 + rng.uniformIndex(5));
    for (auto& c : components) {
      auto len = 1 + rng.uniformIndex(6);
      for (std::size_t k = 0; k < len; ++k) {
        c += alphabet[rng.uniformIndex(alphabet.size())];
      }
    }
    Name name(components);
    REQUIRE(Name::parse(name.toUri()) == name);
  }
}

}
