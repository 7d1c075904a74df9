#include "safsim/saf/update.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <doctest.h>

#include <map>

using namespace safsim;
using namespace safsim::saf;

TEST_SUITE("selectFace") {

static ProbabilityColumn
figureColumn()
{
  return ProbabilityColumn({{0, 4.0 / 9}, {1, 1.0 / 3}, {2, 0.0}}, 2.0 / 9);
}

TEST_CASE("inverse transform on a fixed draw")
{
  ProbabilityColumn c({{0, 0.2}, {1, 0.3}, {2, 0.5}}, 0.0);
  CHECK(selectFace(c, std::nullopt, 0.35) == 1);
  CHECK(selectFace(c, 1, 0.35) == 2);
  CHECK(selectFace(c, std::nullopt, 0.2) == 0);
  CHECK(selectFace(c, std::nullopt, 1.0) == 2);
  CHECK(selectFace(figureColumn(), std::nullopt, 0.8) == kDropFace);
}

TEST_CASE("zero-probability faces are never chosen")
{
  auto c = figureColumn();
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(selectFace(c, std::nullopt, rng) != 2);
  }
}

TEST_CASE("an in_face carrying all the mass forces the dropping face")
{
  ProbabilityColumn c({{0, 1.0}, {1, 0.0}}, 0.0);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(selectFace(c, 0, rng) == kDropFace);
  }
}

TEST_CASE("empirical distribution matches the renormalized column")
{
  ProbabilityColumn c({{0, 0.1}, {1, 0.25}, {2, 0.15}, {3, 0.4}}, 0.1);
  const FaceId inFace = 2;
  const int draws = 100000;
  Rng rng(42);
  std::map<FaceId, int> counts;
  for (int i = 0; i < draws; ++i) {
    auto f = selectFace(c, inFace, rng);
    REQUIRE(f != inFace);
    ++counts[f];
  }

  double mass = 1.0 - c.get(inFace);
  std::map<FaceId, double> expected = {{0, 0.1}, {1, 0.25}, {3, 0.4}, {kDropFace, 0.1}};
  double chi2 = 0.0;
  for (const auto& [f, p] : expected) {
    double e = draws * p / mass;
    chi2 += (counts[f] - e) * (counts[f] - e) / e;
  }
  boost::math::chi_squared dist(static_cast<double>(expected.size() - 1));
  CHECK(chi2 < boost::math::quantile(dist, 0.99));
}

}
