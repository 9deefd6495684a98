#pragma once
// Small helpers shared by the unit tests.
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gitstab/destab.hpp"
#include "gitstab/poly.hpp"

namespace testing_support {

inline const gitstab::DegreeProfile& p112() {
  static const auto p = gitstab::DegreeProfile::parse("p1:1,p1:1,p2:2");
  return p;
}

inline gitstab::OneParamSubgroup lam(const std::vector<gitstab::OneParamSubgroup::Weights>& w) {
  return gitstab::OneParamSubgroup::from_factors(w);
}

// the eight subgroups of the (1,1,2) problem
inline std::vector<gitstab::OneParamSubgroup> eight_lambdas() {
  return {lam({{0, 0}, {0, 0}, {1, 0, -1}}),   lam({{3, -3}, {0, 0}, {2, -1, -1}}),
          lam({{1, -1}, {1, -1}, {0, 0, 0}}),  lam({{0, 0}, {2, -2}, {1, 0, -1}}),
          lam({{1, -1}, {1, -1}, {1, 0, -1}}), lam({{1, -1}, {3, -3}, {2, 0, -2}}),
          lam({{1, -1}, {1, -1}, {2, 0, -2}}), lam({{0, 0}, {3, -3}, {2, 2, -4}})};
}

inline gitstab::Monomial mono(const std::string& text, const gitstab::DegreeProfile& profile = p112()) {
  return gitstab::parse_poly(text, profile).support().at(0);
}

inline std::vector<gitstab::Monomial> monos(const std::vector<std::string>& texts,
                                           const gitstab::DegreeProfile& profile = p112()) {
  std::vector<gitstab::Monomial> out;
  for (const auto& t : texts) out.push_back(mono(t, profile));
  std::sort(out.begin(), out.end());
  return out;
}

inline gitstab::Rational q(long n, long d = 1) {
  gitstab::Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

}  // namespace testing_support
