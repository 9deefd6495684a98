#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gitstab/profile.hpp"

namespace gitstab {

/// Diagonal one-parameter subgroup of the product of special linear groups:
/// one integer weight per variable, zero sum within each factor, primitive.
/// Candidates from enumerate_candidates are additionally normalized (weights
/// non-increasing within each factor); torus witnesses need not be.
class OneParamSubgroup {
 public:
  using Weights = std::vector<std::int64_t>;

  static OneParamSubgroup from_factors(const std::vector<Weights>& per_factor);
  static OneParamSubgroup from_flat(Weights flat, std::vector<std::size_t> shape);

  const Weights& weights() const { return weights_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::vector<Weights> per_factor() const;
  bool is_normalized() const;
  bool matches(const DegreeProfile& profile) const;
  OneParamSubgroup operator-() const;

  std::string to_string() const;  // "((1,-1),(1,-1),(0,0,0))"

  bool operator==(const OneParamSubgroup&) const = default;
  auto operator<=>(const OneParamSubgroup& other) const { return weights_ <=> other.weights_; }

 private:
  OneParamSubgroup(Weights flat, std::vector<std::size_t> shape);
  Weights weights_;
  std::vector<std::size_t> shape_;
};

std::vector<std::size_t> shape_of(const DegreeProfile& profile);

/// Sum over variables of exponent times weight.
std::int64_t pairing(const OneParamSubgroup& lambda, const Monomial& m);

/// Sorts each factor non-increasing and divides by the gcd.
OneParamSubgroup normalize(const std::vector<OneParamSubgroup::Weights>& raw);
OneParamSubgroup normalize(const OneParamSubgroup& lambda);

/// Finite candidate set for the Hilbert-Mumford criterion: normalized
/// generators of every line cut out, inside the zero-sum weight space, by
/// torus_dimension - 1 independent equations <lambda, m_a - m_b> = 0.
/// Both orientations of each line are kept. Unweighted profiles only.
std::vector<OneParamSubgroup> enumerate_candidates(const DegreeProfile& profile, unsigned jobs = 1);

/// Permutations of factor positions that only exchange identical factors.
std::vector<std::vector<std::size_t>> factor_symmetries(const DegreeProfile& profile);
OneParamSubgroup permute_factors(const OneParamSubgroup& lambda, const std::vector<std::size_t>& perm);

/// All images of lambda under variable permutations inside each factor
/// (among variables of equal weight) combined with factor symmetries;
/// sorted and duplicate-free.
std::vector<OneParamSubgroup> symmetry_images(const OneParamSubgroup& lambda, const DegreeProfile& profile);

}  // namespace gitstab
