#include "gitstab/ledger.hpp"

#include <stdexcept>

#include "gitstab/lattice.hpp"
#include "gitstab/poly.hpp"

namespace gitstab {

ChowRing::ChowRing(const DegreeProfile& ambient) {
  for (const auto& f : ambient.factors()) {
    dims_.push_back(static_cast<int>(f.dimension()));
    weight_sums_.push_back(f.weight_sum());
    if (f.unweighted()) {
      norms_.emplace_back(1);
    } else if (f.weights == std::vector<int>{1, 1, 2}) {
      norms_.emplace_back(1, 2);
    } else {
      throw ProfileError("no stored top intersection for weighted factor " + ambient.spec());
    }
  }
}

std::size_t ChowRing::dimension() const {
  std::size_t d = 0;
  for (auto n : dims_) d += static_cast<std::size_t>(n);
  return d;
}

SparsePoly ChowRing::divisor(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != dims_.size()) throw std::invalid_argument("divisor class has wrong length");
  SparsePoly d(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) d += SparsePoly::variable(dims_.size(), i) * coefficients[i];
  return d;
}

SparsePoly ChowRing::anticanonical() const {
  std::vector<Rational> c;
  for (auto w : weight_sums_) c.emplace_back(w);
  return divisor(c);
}

Rational ChowRing::evaluate(const SparsePoly& cycle) const {
  if (cycle.variables() != dims_.size()) throw std::invalid_argument("cycle lives in a different ring");
  Rational top = cycle.coefficient(SparsePoly::Exponents(dims_.begin(), dims_.end()));
  for (const auto& n : norms_) top *= n;
  return top;
}

Rational anticanonical_degree(const DegreeProfile& ambient, const std::vector<int>& divisor_class) {
  if (divisor_class.size() != ambient.factor_count()) throw std::invalid_argument("divisor class has wrong length");
  for (auto c : divisor_class)
    if (c < 0) throw std::invalid_argument("divisor class must be effective");
  const ChowRing ring(ambient);
  if (ring.dimension() < 2) throw std::invalid_argument("ambient too small");
  std::vector<Rational> d;
  for (auto c : divisor_class) d.emplace_back(c);
  const auto D = ring.divisor(d);
  const auto restricted = ring.anticanonical() - D;
  return ring.evaluate(restricted.pow(static_cast<unsigned>(ring.dimension() - 1)) * D);
}

std::string to_string(LedgerRelation r) {
  switch (r) {
    case LedgerRelation::Equal: return "=";
    case LedgerRelation::Less: return "<";
    case LedgerRelation::Greater: return ">";
    case LedgerRelation::LessEqual: return "<=";
    case LedgerRelation::GreaterEqual: return ">=";
  }
  return "?";
}

LedgerEntry make_entry(std::string name, Rational computed, LedgerRelation rel, Rational expected, std::string anchor) {
  LedgerEntry e{std::move(name), std::move(computed), std::move(expected), rel, std::move(anchor), false};
  switch (rel) {
    case LedgerRelation::Equal: e.passed = e.computed == e.expected; break;
    case LedgerRelation::Less: e.passed = e.computed < e.expected; break;
    case LedgerRelation::Greater: e.passed = e.computed > e.expected; break;
    case LedgerRelation::LessEqual: e.passed = e.computed <= e.expected; break;
    case LedgerRelation::GreaterEqual: e.passed = e.computed >= e.expected; break;
  }
  return e;
}

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

// Rank of q*(V(x)V) + l*(C + Sym^4 V) inside the (1,1,2) space, for the
// product l q with l = (x0+x1)(y0+y1), q = z1^2 + z0 z2.
std::size_t orbit_tangent_rank() {
  const auto profile = DegreeProfile::parse("p1:1,p1:1,p2:2");
  const auto basis = enumerate_monomials(profile);
  std::vector<std::string> xy = {"x0*y0", "x0*y1", "x1*y0", "x1*y1"};
  std::vector<std::string> zz = {"z0^2", "z0*z1", "z0*z2", "z1^2", "z1*z2", "z2^2"};
  std::vector<std::string> gens;
  for (const auto& m : xy) gens.push_back(m + "*z1^2 + " + m + "*z0*z2");
  for (const auto& z : zz)
    gens.push_back("x0*y0*" + z + " + x0*y1*" + z + " + x1*y0*" + z + " + x1*y1*" + z);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    const auto f = parse_poly(g, profile);
    std::vector<Rational> row;
    for (const auto& m : basis) row.push_back(f.coefficient(m));
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace

std::vector<LedgerEntry> run_ledger() {
  using R = LedgerRelation;
  std::vector<LedgerEntry> out;
  const auto L0 = IntegralLattice::lambda0();

  // volume bounds
  const Rational a = 16 * q(3, 4) * q(3, 4) * q(3, 4);
  out.push_back(make_entry("volume.weighted_blowup", a, R::Equal, q(27, 4), "vol 16*(3/4)^3"));
  const Rational b = q(64 * 6) / (3 * 3 * 2 * 2);
  out.push_back(make_entry("volume.bound_b", b, R::Equal, q(32, 3), "vol 4^3*6/(3*3*2*2)"));
  out.push_back(make_entry("volume.bound_b_below", b, R::Less, q(27, 2), "vol 32/3 < 27/2"));
  const Rational c = q(27 * 6) / (3 * 3 * 3 * 1);
  out.push_back(make_entry("volume.bound_c", c, R::Equal, q(6), "vol 27*6/(3*3*3*1)"));
  out.push_back(make_entry("volume.bound_c_below", c, R::Less, q(27, 2), "vol 6 < 27/2"));

  // Riemann-Roch on the K3 section
  const Rational h3sq = L0.qform({0, 0, 1});
  out.push_back(make_entry("rr.h0_H3", q(1, 2) * h3sq + 2, R::Equal, q(3), "K3 RR (H3|S)^2/2+2"));
  const Rational two_l_sq = 4 * q(4);
  out.push_back(make_entry("rr.h0_2L", q(1, 2) * two_l_sq + 2, R::Equal, q(10), "K3 RR (2L|S)^2/2+2"));
  const Rational two_h3_sq = L0.qform({0, 0, 2});
  out.push_back(make_entry("rr.h0_2H3", q(1, 2) * two_h3_sq + 2, R::Equal, q(6), "K3 RR (2H3|S)^2/2+2"));

  // Luna slice dimensions, V = H^0(P^1, O(1))
  const std::size_t v = 2;
  const Rational vv = v * v;
  const Rational sym = 1 + (4 + v - 1);  // C + Sym^4 V, dim Sym^4 V = binom(4 + v - 1, v - 1)
  out.push_back(make_entry("luna.dim_VV", vv, R::Equal, q(4), "dim V(x)V"));
  out.push_back(make_entry("luna.dim_C_Sym4", sym, R::Equal, q(6), "dim C+Sym^4V"));
  out.push_back(make_entry("luna.quotient_l", vv - 1, R::Equal, q(3), "dim (V(x)V)/l"));
  out.push_back(make_entry("luna.quotient_q", sym - 1, R::Equal, q(5), "dim (C+Sym^4V)/q"));
  out.push_back(make_entry("luna.normal_product", (vv - 1) * (sym - 1), R::Equal, q(15), "normal space dim"));
  const Rational total = vv * sym;
  out.push_back(make_entry("luna.normal_span", total - static_cast<long>(orbit_tangent_rank()), R::Equal, q(15),
                           "24 - rank(q V(x)V + l (C+Sym^4V))"));
  out.push_back(make_entry("luna.tangent", total - 1, R::Equal, q(23), "dim tangent of the Hilbert scheme"));

  // divisor classes by adjunction: class = -K_ambient - (-K_X restricted class)
  const auto p112 = DegreeProfile::parse("p1:1,p1:1,p2:2");
  const std::vector<int> target_a{1, 1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational cls = p112.factor(i).weight_sum() - target_a[i];
    const Rational want = std::vector<int>{1, 1, 2}[i];
    out.push_back(make_entry("class.P1xP1xP2[" + std::to_string(i) + "]", cls, R::Equal, want, "adjunction (1,1,2)"));
  }
  const auto pw = DegreeProfile::parse("p(1,1,2):2,p2:2");
  const std::vector<int> target_b{2, 1};
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational cls = pw.factor(i).weight_sum() - target_b[i];
    out.push_back(make_entry("class.P112xP2[" + std::to_string(i) + "]", cls, R::Equal, q(2), "adjunction (2,2)"));
  }

  // anticanonical degrees
  out.push_back(make_entry("degree.P1xP1xP2(1,1,2)", anticanonical_degree(p112, {1, 1, 2}), R::Equal, q(18),
                           "(-K_X)^3 on P1xP1xP2"));
  out.push_back(make_entry("degree.P112xP2(2,2)", anticanonical_degree(pw, {2, 2}), R::Equal, q(18),
                           "(-K_X)^3 on P(1,1,2)xP2"));
  out.push_back(make_entry("degree.P2xP2(1,1)", anticanonical_degree(DegreeProfile::parse("p2:1,p2:1"), {1, 1}),
                           R::Equal, q(48), "(-K_X)^3 on P2xP2"));

  // quadric surface
  for (const char* spec : {"p1:1,p1:1", "p(1,1,2):2"}) {
    const ChowRing ring(DegreeProfile::parse(spec));
    const auto k = ring.anticanonical();
    out.push_back(make_entry(std::string("delpezzo.K2[") + spec + "]", ring.evaluate(k * k), R::Equal, q(8),
                             "(-K)^2 quadric surface"));
  }
  return out;
}

}  // namespace gitstab
