#include <catch_amalgamated.hpp>

#include "gitstab/fixtures.hpp"
#include "gitstab/sing.hpp"
#include "support.hpp"

using namespace gitstab;
using testing_support::p112;
using testing_support::q;

namespace {

const VariableNames abcd({"a", "b", "c", "d"});

SparsePoly local(const std::string& text) { return parse_affine(text, abcd); }

std::size_t mu(const SparsePoly& g, int truncation = 10) {
  const auto r = milnor_number(g, truncation);
  REQUIRE(r.status == MilnorResult::Status::Finite);
  return r.value;
}

const FixtureSet& fixtures() {
  static const auto fx = FixtureSet::load_default();
  return fx;
}

// random integer matrix with determinant one, as a product of elementary moves
std::vector<std::vector<long>> unimodular(std::mt19937_64& g, std::size_t n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(testing_support::uniform(g, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(testing_support::uniform(g, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const long k = testing_support::uniform(g, -2, 2);
    for (std::size_t c = 0; c < n; ++c) m[i][c] += k * m[j][c];
  }
  return m;
}

SparsePoly change_coordinates(const SparsePoly& g, const std::vector<std::vector<long>>& m) {
  const auto n = g.variables();
  std::vector<SparsePoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    SparsePoly row(n);
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != 0) row += SparsePoly::variable(n, j) * q(m[i][j]);
    images.push_back(row);
  }
  return g.substitute(images);
}

}  // namespace

TEST_CASE("points parse, print and validate") {
  const auto p = parse_point("[[0:1],[1:-1],[0:0:1]]", p112());
  CHECK(p.chart.pivots == std::vector<std::size_t>{1, 0, 2});
  CHECK(p.coordinates == std::vector<Rational>{q(0), q(-1), q(0), q(0)});
  CHECK(to_string(p, p112()) == "[[0:1],[1:-1],[0:0:1]]");
  CHECK(to_string(parse_point("[[2:4],[1:0],[3:0:6]]", p112()), p112()) == "[[1:2],[1:0],[1:0:2]]");
  CHECK_THROWS(parse_point("[[0:0],[1:0],[0:0:1]]", p112()));
  CHECK_THROWS(parse_point("[[0:1],[1:0]]", p112()));
  CHECK_THROWS(parse_point("[[0:1],[1:0],[0:1]]", p112()));
}

TEST_CASE("singular point examples") {
  const auto luna = fixtures().polynomial("luna-center").poly;
  const auto p = parse_point("[[1:1],[1:-1],[0:0:1]]", p112());
  const auto vg = evaluate_gradient(luna, p.chart, p.coordinates);
  const bool oracle = vg.value == 0 && std::all_of(vg.gradient.begin(), vg.gradient.end(), [](const Rational& r) { return r == 0; });
  CHECK(is_singular_at(luna, p) == oracle);
  CHECK(oracle);

  const auto f = parse_poly("x0*y0*z0^2", p112());
  CHECK(is_singular_at(f, parse_point("[[0:1],[0:1],[0:0:1]]", p112())));

  const auto smooth = parse_poly("x0*y0*z0^2 + x1*y1*z1^2 + x0*y1*z2^2 + x1*y0*z0*z1 + 3*x0*y0*z1*z2", p112());
  CHECK(!is_singular_at(smooth, parse_point("[[1:2],[3:-1],[1:1:1]]", p112())));
  CHECK(!is_singular_at(smooth, parse_point("[[0:1],[0:1],[0:1:0]]", p112())));
}

TEST_CASE("Hessian corank of normal forms") {
  CHECK(hessian_corank(local("a^2 + b^2 + c^2 + d^2")) == 0);
  CHECK(hessian_corank(local("a^2 + b^2 + c^2 + d^4")) == 1);
  CHECK(hessian_corank(local("a^2 + b^2 + c^3 + c*d^2")) == 2);
  CHECK_THROWS(hessian_corank(local("a + b^2")));
}

TEST_CASE("Milnor numbers of normal forms") {
  CHECK(mu(local("a^2 + b^2 + c^2 + d^2")) == 1);
  CHECK(mu(local("a^2 + b^2 + c^2 + d^4")) == 3);
  CHECK(mu(local("a^2 + b^2 + c^3 + d^3")) == 4);
  CHECK(mu(local("a^2 + b^2 + c^3 + c*d^2")) == 4);
  CHECK_THROWS(milnor_number(local("a + b^2"), 8));
  CHECK_THROWS(milnor_number(local("a^2 + b^2"), 3));
  // a non-isolated singularity never stabilizes
  CHECK(milnor_number(local("a^2 + b^2 + c^2"), 8).status == MilnorResult::Status::NotStabilized);
}

TEST_CASE("ADE table") {
  const auto finite = [](std::size_t v) { return MilnorResult{MilnorResult::Status::Finite, v, 8}; };
  CHECK(ade_classify(1, finite(3)) == "A_3");
  CHECK(ade_classify(0, finite(1)) == "A_1");
  CHECK(ade_classify(2, finite(4)) == "D_4");
  CHECK(ade_classify(2, finite(5)) == "Unclassified");
  CHECK(ade_classify(3, finite(8)) == "Unclassified");
  CHECK(ade_classify(1, MilnorResult{}) == "Unclassified");
}

TEST_CASE("Brieskorn polynomials in up to three variables") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b)
      for (int c = 2; c <= 4; ++c) {
        const VariableNames abc({"a", "b", "c"});
        const auto g = parse_affine("a^" + std::to_string(a) + " + b^" + std::to_string(b) + " + c^" + std::to_string(c), abc);
        const int t = std::max(4, (a - 2) + (b - 2) + (c - 2) + 2);
        const auto r = milnor_number(g, t);
        INFO(a << " " << b << " " << c);
        REQUIRE(r.status == MilnorResult::Status::Finite);
        CHECK(r.value == static_cast<std::size_t>((a - 1) * (b - 1) * (c - 1)));
      }
}

TEST_CASE("corank and Milnor number survive unimodular coordinate changes") {
  auto g = testing_support::rng(2024);
  const std::vector<std::string> models{"a^2 + b^2 + c^2 + d^4", "a^2 + b^2 + c^3 + c*d^2", "a^2 + b^2 + c^2 + d^2 + a^3",
                                        "a^2 + b^2 + c^2 + d^3"};
  for (const auto& text : models) {
    const auto base = local(text);
    const auto c0 = hessian_corank(base);
    const auto m0 = mu(base, 10);
    for (int trial = 0; trial < 4; ++trial) {
      const auto moved = change_coordinates(base, unimodular(g, 4));
      INFO(text);
      CHECK(hessian_corank(moved) == c0);
      CHECK(mu(moved, 10) == m0);
    }
  }
}

TEST_CASE("nondegenerate quadrics with noise are A_1") {
  auto g = testing_support::rng(808);
  int seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    SparsePoly f(3);
    std::vector<std::vector<Rational>> h(3, std::vector<Rational>(3, 0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        const long c = testing_support::uniform(g, -3, 3);
        SparsePoly::Exponents e(3, 0);
        ++e[i];
        ++e[j];
        f.add_term(e, q(c));
        h[i][j] += i == j ? q(2 * c) : q(c);
        if (i != j) h[j][i] += q(c);
      }
    for (int k = 0; k < 3; ++k) {
      SparsePoly::Exponents e{testing_support::uniform(g, 0, 3), testing_support::uniform(g, 0, 3), 0};
      e[2] = 3 - e[0] - e[1];
      if (e[2] < 0) continue;
      f.add_term(e, q(testing_support::uniform(g, -5, 5)));
    }
    if (f.is_zero() || f.min_degree() < 2) continue;
    const bool nondegenerate = matrix_rank(h) == 3;
    const auto corank = hessian_corank(f);
    CHECK((corank == 0) == nondegenerate);
    if (nondegenerate) {
      ++seen;
      const auto r = milnor_number(f, 6);
      CHECK(ade_classify(corank, r) == "A_1");
    }
  }
  CHECK(seen > 5);
}

TEST_CASE("zero-weight lambda6 member has two D_4 points") {
  const auto& pf = fixtures().polynomial("N0lambda6-ones");
  std::vector<ChartPoint> pts;
  for (const auto& pp : pf.patterns.at("fixed")) pts.push_back(pp.point);
  const auto reps = scan_pattern(pf.poly, pts, 8, 2);
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) {
    CHECK(r.label == "D_4");
    CHECK(r.hessian_corank == std::optional<std::size_t>(2));
    CHECK(r.multiplicity == 2);
  }
}

TEST_CASE("zero-weight lambda2 member has eight A_1 points") {
  const auto& pf = fixtures().polynomial("N0lambda2-conics");
  std::vector<ChartPoint> pts;
  for (const auto& pp : pf.patterns.at("fixed")) pts.push_back(pp.point);
  const auto reps = scan_pattern(pf.poly, pts);
  REQUIRE(reps.size() == 8);
  for (const auto& r : reps) CHECK(r.label == "A_1");
}

TEST_CASE("reports are labelled off the hypersurface and at smooth points") {
  const auto f = parse_poly("x0*y0*z0^2 + x1*y1*z1^2", p112());
  CHECK(analyze_point(f, parse_point("[[1:0],[1:0],[1:0:0]]", p112())).label == "NotOnHypersurface");
  const auto smooth = analyze_point(f, parse_point("[[1:1],[1:-1],[1:1:0]]", p112()));
  CHECK(smooth.label == "Smooth");
  CHECK(smooth.multiplicity == 1);
  CHECK_THROWS(analyze_point(MultiPoly(p112()), parse_point("[[1:0],[1:0],[0:1:0]]", p112())));
}

TEST_CASE("non-isolated loci") {
  const auto& luna = fixtures().polynomial("luna-center");
  const auto& line = luna.loci.at("line");
  CHECK(verify_nonisolated(luna.poly, line.locus));
  CHECK(multiplicity_along(luna.poly, line.locus) == 2);

  const auto& generic = fixtures().polynomial("Noplus-lambda0-generic");
  CHECK(verify_nonisolated(generic.poly, generic.loci.at("double-curve").locus));

  const auto smooth = parse_poly("x0*y0*z0^2 + x1*y1*z1^2 + x0*y1*z2^2 + x1*y0*z0*z1 + 3*x0*y0*z1*z2", p112());
  CHECK(!verify_nonisolated(smooth, line.locus));

  Locus escape = line.locus;
  escape.coordinates[0] = parse_affine("a", VariableNames({"a"}));
  CHECK_THROWS_AS(verify_nonisolated(luna.poly, escape), ChartEscapeError);

  Locus constant = line.locus;
  constant.coordinates[1] = parse_affine("0", VariableNames({"a"}));
  CHECK(!verify_nonisolated(luna.poly, constant));
}

TEST_CASE("conic pair certificates") {
  for (const auto& pair : fixtures().conic_pairs()) {
    const auto cert = certify_conic_pair(fixtures().conic(pair.first), fixtures().conic(pair.second),
                                         fixtures().conic(pair.third), pair.points);
    INFO(pair.first << "," << pair.second);
    CHECK(cert.ok());
  }
  const VariableNames z({"z0", "z1", "z2"});
  // both conics are tangent to z0 = 0 at [0:0:1]
  const auto q1 = parse_affine("z0*z2 - z1^2", z);
  const auto q2 = parse_affine("z0*z2 - z1^2 + z0^2", z);
  const auto cert = certify_conic_pair(q1, q2, parse_affine("z0^2 + z1^2 + z2^2", z), {{q(0), q(0), q(1)}});
  CHECK(cert.points_on_both);
  CHECK(!cert.transverse);
  CHECK(!cert.ok());
  CHECK(!certify_conic_pair(parse_affine("z0^2", z), q2, q1, {}).first_smooth);
}
