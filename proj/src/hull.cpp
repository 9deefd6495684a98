#include "gitstab/hull.hpp"

#include <stdexcept>

#include "gitstab/simplex.hpp"

namespace gitstab {

WeightPoint to_point(const Monomial& m) {
  WeightPoint p;
  p.reserve(m.exponents.size());
  for (auto e : m.exponents) p.emplace_back(e);
  return p;
}

std::vector<WeightPoint> to_points(const std::vector<Monomial>& ms) {
  std::vector<WeightPoint> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(to_point(m));
  return out;
}

WeightPoint centroid_point(const DegreeProfile& profile) {
  const auto all = enumerate_monomials(profile);
  WeightPoint c(profile.variable_count(), 0);
  for (const auto& m : all)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += m.exponents[i];
  for (auto& v : c) v /= static_cast<long>(all.size());
  return c;
}

int affine_dimension(const std::vector<WeightPoint>& S) {
  if (S.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < S.size(); ++k) {
    std::vector<Rational> r(S[0].size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = S[k][i] - S[0][i];
    rows.push_back(std::move(r));
  }
  return static_cast<int>(matrix_rank(std::move(rows)));
}

std::string to_string(HullPosition h) {
  switch (h) {
    case HullPosition::Outside: return "Outside";
    case HullPosition::Boundary: return "Boundary";
    case HullPosition::Interior: return "Interior";
  }
  return "?";
}

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Unstable: return "Unstable";
    case StabilityClass::StrictlySemistable: return "StrictlySemistable";
    case StabilityClass::Stable: return "Stable";
  }
  return "?";
}

namespace {

void check_dims(const WeightPoint& p, const std::vector<WeightPoint>& S) {
  if (S.empty()) throw std::invalid_argument("empty point set");
  for (const auto& s : S)
    if (s.size() != p.size()) throw std::invalid_argument("point dimension mismatch");
}

// Variables alpha_s >= 0 (one per point of S) with sum 1 and sum alpha_s s = p.
LinearProgram convex_combination(const WeightPoint& p, const std::vector<WeightPoint>& S, std::size_t extra) {
  LinearProgram lp;
  lp.c.assign(S.size() + extra, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<Rational> row(S.size() + extra, 0);
    for (std::size_t k = 0; k < S.size(); ++k) row[k] = S[k][i];
    lp.add_constraint(std::move(row), Relation::Equal, p[i]);
  }
  std::vector<Rational> ones(S.size() + extra, 0);
  for (std::size_t k = 0; k < S.size(); ++k) ones[k] = 1;
  lp.add_constraint(std::move(ones), Relation::Equal, 1);
  return lp;
}

WeightPoint barycenter(const std::vector<WeightPoint>& S) {
  WeightPoint b(S[0].size(), 0);
  for (const auto& s : S)
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += s[i];
  for (auto& v : b) v /= static_cast<long>(S.size());
  return b;
}

}  // namespace

Rational escape_parameter(const WeightPoint& p, const std::vector<WeightPoint>& S) {
  check_dims(p, S);
  const auto b = barycenter(S);
  if (b == p) throw std::invalid_argument("escape direction undefined at the barycenter");
  // sum alpha_s s - t (p - b) = p, maximize t
  auto lp = convex_combination(p, S, 1);
  for (std::size_t i = 0; i < p.size(); ++i) lp.A[i][S.size()] = b[i] - p[i];
  lp.c[S.size()] = -1;
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) throw std::invalid_argument("point is not in the convex hull");
  return res.x[S.size()];
}

HullPosition hull_membership(const WeightPoint& p, const std::vector<WeightPoint>& S, int reference_dimension) {
  check_dims(p, S);
  if (solve(convex_combination(p, S, 0)).status != LpStatus::Optimal) return HullPosition::Outside;
  const bool full = affine_dimension(S) == reference_dimension;
  if (barycenter(S) == p) return full ? HullPosition::Interior : HullPosition::Boundary;
  if (escape_parameter(p, S) > 0 && full) return HullPosition::Interior;
  return HullPosition::Boundary;
}

HullPosition hull_membership(const WeightPoint& p, const std::vector<WeightPoint>& S, const DegreeProfile& profile) {
  return hull_membership(p, S, affine_dimension(to_points(enumerate_monomials(profile))));
}

namespace {

// lambda = lp - lm, per-factor sums zero, pairing >= 1 on the support,
// minimal L1 norm.
OneParamSubgroup separating_subgroup(const std::vector<Monomial>& support, const DegreeProfile& profile) {
  const std::size_t n = profile.variable_count();
  LinearProgram lp;
  lp.c.assign(2 * n, 1);
  for (std::size_t f = 0; f < profile.factor_count(); ++f) {
    std::vector<Rational> row(2 * n, 0);
    for (std::size_t j = 0; j < profile.factor(f).size(); ++j) {
      row[profile.offset(f) + j] = 1;
      row[n + profile.offset(f) + j] = -1;
    }
    lp.add_constraint(std::move(row), Relation::Equal, 0);
  }
  for (const auto& m : support) {
    std::vector<Rational> row(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = m.exponents[i];
      row[n + i] = -m.exponents[i];
    }
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 1);
  }
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) throw std::logic_error("no separating subgroup for an outside centroid");
  std::vector<Rational> w(n);
  Integer denom = 1;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = res.x[i] - res.x[n + i];
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w[i].get_den_mpz_t());
  }
  OneParamSubgroup::Weights flat(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scaled = w[i] * denom;
    if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("witness weight out of range");
    flat[i] = scaled.get_num().get_si();
  }
  const auto g = gcd_of(flat);
  for (auto& v : flat) v /= g;
  return OneParamSubgroup::from_flat(std::move(flat), shape_of(profile));
}

}  // namespace

TorusVerdict torus_verdict(const std::vector<Monomial>& support, const DegreeProfile& profile) {
  if (support.empty()) throw std::invalid_argument("empty support");
  if (profile.is_weighted()) throw ProfileError("torus verdicts are implemented for unweighted factors only");
  for (const auto& m : support) require_profile(m, profile);
  TorusVerdict v;
  v.position = hull_membership(centroid_point(profile), to_points(support), profile);
  switch (v.position) {
    case HullPosition::Interior: v.cls = StabilityClass::Stable; break;
    case HullPosition::Boundary: v.cls = StabilityClass::StrictlySemistable; break;
    case HullPosition::Outside:
      v.cls = StabilityClass::Unstable;
      v.witness = separating_subgroup(support, profile);
      break;
  }
  return v;
}

StabilityClass exhaustive_verdict(const std::vector<Monomial>& support, const std::vector<OneParamSubgroup>& lambdas) {
  if (support.empty()) throw std::invalid_argument("empty support");
  bool stable = true;
  for (const auto& l : lambdas) {
    std::int64_t lo = pairing(l, support.front());
    for (const auto& m : support) lo = std::min(lo, pairing(l, m));
    if (lo > 0) return StabilityClass::Unstable;
    if (lo >= 0) stable = false;
  }
  return stable ? StabilityClass::Stable : StabilityClass::StrictlySemistable;
}

}  // namespace gitstab
