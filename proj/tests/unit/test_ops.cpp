#include <catch_amalgamated.hpp>

#include <set>

#include "gitstab/hull.hpp"
#include "gitstab/ops.hpp"
#include "support.hpp"

using namespace gitstab;
using testing_support::lam;
using testing_support::mono;
using testing_support::p112;

namespace {

const std::vector<OneParamSubgroup>& p112_candidates() {
  static const auto c = enumerate_candidates(p112(), 2);
  return c;
}

}  // namespace

TEST_CASE("pairing examples") {
  CHECK(pairing(lam({{0, 0}, {0, 0}, {1, 0, -1}}), mono("x0*y0*z0*z2")) == 0);
  CHECK(pairing(lam({{3, -3}, {0, 0}, {2, -1, -1}}), mono("x0*y0*z0^2")) == 7);
  CHECK(pairing(lam({{1, -1}, {1, -1}, {0, 0, 0}}), mono("x1*y1*z1^2")) == -2);
  CHECK_THROWS_AS(pairing(lam({{1, -1}}), mono("x0*y0*z0^2")), ProfileError);
}

TEST_CASE("subgroup construction validates") {
  CHECK_THROWS(lam({{1, 0}}));
  CHECK_THROWS(lam({{2, -2}}));
  CHECK_THROWS(lam({{0, 0}}));
  CHECK(lam({{1, -1}, {0, 0, 0}}).to_string() == "((1,-1),(0,0,0))");
  CHECK((-lam({{1, -1}})).weights() == OneParamSubgroup::Weights{-1, 1});
}

TEST_CASE("normalize sorts and divides") {
  CHECK(normalize({{-1, 1}, {0, 0}, {0, 0, 0}}) == lam({{1, -1}, {0, 0}, {0, 0, 0}}));
  CHECK(normalize({{2, -2}, {2, -2}, {0, 0, 0}}) == lam({{1, -1}, {1, -1}, {0, 0, 0}}));
  CHECK_THROWS(normalize(std::vector<OneParamSubgroup::Weights>{{0, 0}, {0, 0, 0}}));
  CHECK_THROWS(normalize(std::vector<OneParamSubgroup::Weights>{{1, 0}, {0, 0, 0}}));
}

TEST_CASE("normalize is idempotent on random vectors") {
  auto g = testing_support::rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<OneParamSubgroup::Weights> raw;
    bool nonzero = false;
    for (std::size_t size : {2u, 2u, 3u}) {
      OneParamSubgroup::Weights w(size);
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < size; ++i) {
        w[i] = testing_support::uniform(g, -6, 6);
        sum += w[i];
      }
      w.back() = -sum;
      for (auto x : w) nonzero = nonzero || x != 0;
      raw.push_back(w);
    }
    if (!nonzero) continue;
    const auto n = normalize(raw);
    CHECK(n.is_normalized());
    CHECK(normalize(n) == n);
    CHECK(normalize(n.per_factor()) == n);
  }
}

TEST_CASE("a single P1 of degree one has one candidate") {
  const auto c = enumerate_candidates(DegreeProfile::parse("p1:1"));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == lam({{1, -1}}));
}

TEST_CASE("the eight subgroups are candidates") {
  const std::set<OneParamSubgroup> cs(p112_candidates().begin(), p112_candidates().end());
  for (const auto& l : testing_support::eight_lambdas()) CHECK(cs.count(normalize(l)) == 1);
}

TEST_CASE("candidate list is sorted, unique and valid") {
  const auto& c = p112_candidates();
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::adjacent_find(c.begin(), c.end()) == c.end());
  for (const auto& l : c) {
    CHECK(l.matches(p112()));
    CHECK(l.is_normalized());
    CHECK(std::any_of(l.weights().begin(), l.weights().end(), [](auto w) { return w != 0; }));
  }
}

TEST_CASE("candidate enumeration does not depend on the job count") {
  CHECK(enumerate_candidates(p112(), 1) == p112_candidates());
  const auto p = DegreeProfile::parse("p1:2,p2:2");
  CHECK(enumerate_candidates(p, 1) == enumerate_candidates(p, 3));
}

TEST_CASE("candidates are closed under swapping identical factors") {
  const std::set<OneParamSubgroup> cs(p112_candidates().begin(), p112_candidates().end());
  for (const auto& l : p112_candidates()) CHECK(cs.count(normalize(permute_factors(l, {1, 0, 2}))) == 1);
  const auto syms = factor_symmetries(p112());
  CHECK(syms.size() == 2);
  CHECK(factor_symmetries(DegreeProfile::parse("p1:1,p1:2")).size() == 1);
}

TEST_CASE("the full monomial set is balanced for every candidate") {
  const auto all = enumerate_monomials(p112());
  for (const auto& l : p112_candidates()) {
    std::int64_t total = 0;
    for (const auto& m : all) total += pairing(l, m);
    CHECK(total == 0);
  }
}

TEST_CASE("weighted profiles are refused") {
  CHECK_THROWS_AS(enumerate_candidates(DegreeProfile::parse("p(1,1,2):2,p2:2")), ProfileError);
}

TEST_CASE("candidates decide P1 stability like a brute-force search") {
  auto g = testing_support::rng(11);
  for (int d = 1; d <= 3; ++d) {
    const auto p = DegreeProfile::parse("p1:" + std::to_string(d));
    const auto all = enumerate_monomials(p);
    std::vector<OneParamSubgroup> closed;
    for (const auto& c : enumerate_candidates(p))
      for (const auto& img : symmetry_images(c, p)) closed.push_back(img);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Monomial> support;
      for (const auto& m : all)
        if (testing_support::uniform(g, 0, 1)) support.push_back(m);
      if (support.empty()) continue;
      bool unstable = false;
      bool not_stable = false;
      for (int u = -3 * d; u <= 3 * d; ++u) {
        if (u == 0) continue;
        std::int64_t lo = INT64_MAX;
        for (const auto& m : support) lo = std::min<std::int64_t>(lo, u * (m.exponents[0] - m.exponents[1]));
        unstable = unstable || lo > 0;
        not_stable = not_stable || lo >= 0;
      }
      const auto expected = unstable     ? StabilityClass::Unstable
                            : not_stable ? StabilityClass::StrictlySemistable
                                         : StabilityClass::Stable;
      CHECK(exhaustive_verdict(support, closed) == expected);
    }
  }
}

TEST_CASE("symmetry images of a P2 weight") {
  const auto p = DegreeProfile::parse("p2:1");
  const auto imgs = symmetry_images(lam({{1, 0, -1}}), p);
  CHECK(imgs.size() == 6);
  CHECK(std::is_sorted(imgs.begin(), imgs.end()));
  CHECK(symmetry_images(lam({{2, -1, -1}}), p).size() == 3);
}
