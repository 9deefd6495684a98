#include <catch_amalgamated.hpp>

#include "gitstab/hull.hpp"
#include "gitstab/simplex.hpp"
#include "support.hpp"

using namespace gitstab;
using testing_support::lam;
using testing_support::p112;
using testing_support::q;

namespace {

std::vector<Monomial> noplus(const OneParamSubgroup& l) { return destab_record(l, p112()).n_oplus; }

std::vector<Rational> row(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(q(x));
  return out;
}

}  // namespace

TEST_CASE("centroids") {
  CHECK(centroid_point(p112()) == WeightPoint{q(1, 2), q(1, 2), q(1, 2), q(1, 2), q(2, 3), q(2, 3), q(2, 3)});
  CHECK(centroid_point(DegreeProfile::parse("p2:2")) == WeightPoint{q(2, 3), q(2, 3), q(2, 3)});
  CHECK(centroid_point(DegreeProfile::parse("p(1,1,2):2")) == WeightPoint{q(3, 4), q(3, 4), q(1, 4)});
}

TEST_CASE("hull membership examples") {
  const auto c = centroid_point(p112());
  const auto all = to_points(enumerate_monomials(p112()));
  CHECK(hull_membership(c, all, p112()) == HullPosition::Interior);
  CHECK(hull_membership(c, to_points(noplus(lam({{1, -1}, {1, -1}, {0, 0, 0}}))), p112()) == HullPosition::Boundary);
  std::vector<Monomial> x0y0;
  for (const auto& m : enumerate_monomials(p112()))
    if (m.exponents[0] == 1 && m.exponents[2] == 1) x0y0.push_back(m);
  CHECK(hull_membership(c, to_points(x0y0), p112()) == HullPosition::Outside);
}

TEST_CASE("hull membership errors") {
  CHECK_THROWS(hull_membership({q(1)}, {}, 0));
  CHECK_THROWS(hull_membership({q(1), q(0)}, {{q(1)}}, 0));
}

TEST_CASE("a lower-dimensional set never has the point inside") {
  // barycenter of a segment in the plane
  const std::vector<WeightPoint> seg{{q(0), q(0)}, {q(2), q(0)}};
  CHECK(hull_membership({q(1), q(0)}, seg, 1) == HullPosition::Interior);
  CHECK(hull_membership({q(1), q(0)}, seg, 2) == HullPosition::Boundary);
  CHECK(hull_membership({q(0), q(0)}, seg, 1) == HullPosition::Boundary);
  CHECK(hull_membership({q(3), q(0)}, seg, 1) == HullPosition::Outside);
  CHECK(affine_dimension(seg) == 1);
  CHECK(affine_dimension({}) == -1);
}

TEST_CASE("escape parameter") {
  const std::vector<WeightPoint> square{{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}, {q(2), q(2)}};
  CHECK(escape_parameter({q(3, 2), q(1)}, square) == q(1));
  CHECK(escape_parameter({q(2), q(1)}, square) == q(0));
  CHECK_THROWS(escape_parameter({q(1), q(1)}, square));
}

TEST_CASE("torus verdict examples") {
  const auto v1 = torus_verdict(noplus(lam({{3, -3}, {0, 0}, {2, -1, -1}})), p112());
  CHECK(v1.cls == StabilityClass::Unstable);
  REQUIRE(v1.witness);
  for (const auto& m : noplus(lam({{3, -3}, {0, 0}, {2, -1, -1}}))) CHECK(pairing(*v1.witness, m) > 0);
  CHECK(torus_verdict(noplus(lam({{1, -1}, {1, -1}, {2, 0, -2}})), p112()).cls == StabilityClass::StrictlySemistable);
  const auto full = torus_verdict(enumerate_monomials(p112()), p112());
  CHECK(full.cls == StabilityClass::Stable);
  CHECK(!full.witness);
  CHECK_THROWS(torus_verdict({}, p112()));
  CHECK_THROWS_AS(torus_verdict(enumerate_monomials(DegreeProfile::parse("p(1,1,2):2")),
                                DegreeProfile::parse("p(1,1,2):2")),
                  ProfileError);
}

TEST_CASE("every point of a set is in its hull") {
  auto g = testing_support::rng(5);
  const auto all = enumerate_monomials(p112());
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<WeightPoint> S;
    for (const auto& m : all)
      if (testing_support::uniform(g, 0, 3) == 0) S.push_back(to_point(m));
    if (S.empty()) continue;
    for (const auto& s : S) CHECK(hull_membership(s, S, p112()) != HullPosition::Outside);
  }
}

TEST_CASE("verdicts are invariant under swapping the P1 factors") {
  auto g = testing_support::rng(17);
  const auto all = enumerate_monomials(p112());
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> S;
    std::vector<Monomial> T;
    for (const auto& m : all)
      if (testing_support::uniform(g, 0, 2) == 0) {
        S.push_back(m);
        T.push_back(permute_factors(m, p112(), {1, 0, 2}));
      }
    if (S.empty()) continue;
    std::sort(T.begin(), T.end());
    CHECK(torus_verdict(S, p112()).cls == torus_verdict(T, p112()).cls);
  }
}

TEST_CASE("unstable witnesses separate on random supports") {
  auto g = testing_support::rng(23);
  const auto all = enumerate_monomials(p112());
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> S;
    for (const auto& m : all)
      if (testing_support::uniform(g, 0, 4) == 0) S.push_back(m);
    if (S.empty()) continue;
    const auto v = torus_verdict(S, p112());
    if (v.cls != StabilityClass::Unstable) continue;
    ++seen;
    REQUIRE(v.witness);
    CHECK(v.witness->matches(p112()));
    for (const auto& m : S) CHECK(pairing(*v.witness, m) > 0);
  }
  CHECK(seen > 0);
}

TEST_CASE("simplex: optimum, infeasible, unbounded") {
  LinearProgram lp;
  lp.c = row({-1, -1});
  lp.add_constraint(row({1, 2}), Relation::LessEqual, 4);
  lp.add_constraint(row({3, 1}), Relation::LessEqual, 6);
  auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == q(-14, 5));
  CHECK(r.x == std::vector<Rational>{q(8, 5), q(6, 5)});

  LinearProgram bad;
  bad.c = row({1});
  bad.add_constraint(row({1}), Relation::GreaterEqual, 2);
  bad.add_constraint(row({1}), Relation::LessEqual, 1);
  CHECK(solve(bad).status == LpStatus::Infeasible);

  LinearProgram open;
  open.c = row({-1, 0});
  open.add_constraint(row({1, -1}), Relation::Equal, 0);
  CHECK(solve(open).status == LpStatus::Unbounded);
}

TEST_CASE("simplex terminates on a cycling-prone program") {
  // classic degenerate example that cycles under the largest-coefficient rule
  LinearProgram lp;
  lp.c = {q(-3, 4), q(150), q(-1, 50), q(6)};
  lp.add_constraint({q(1, 4), q(-60), q(-1, 25), q(9)}, Relation::LessEqual, 0);
  lp.add_constraint({q(1, 2), q(-90), q(-1, 50), q(3)}, Relation::LessEqual, 0);
  lp.add_constraint({q(0), q(0), q(1), q(0)}, Relation::LessEqual, 1);
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == q(-1, 20));
}

TEST_CASE("simplex copes with redundant equalities") {
  LinearProgram lp;
  lp.c = row({1, 1, 1});
  lp.add_constraint(row({1, 1, 1}), Relation::Equal, 3);
  lp.add_constraint(row({2, 2, 2}), Relation::Equal, 6);
  lp.add_constraint(row({1, 0, 0}), Relation::GreaterEqual, 1);
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
}
