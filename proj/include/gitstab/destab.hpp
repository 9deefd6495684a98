#pragma once

#include <vector>

#include "gitstab/ops.hpp"
#include "gitstab/profile.hpp"

namespace gitstab {

/// Monomials split by the sign of their pairing with lambda. Each set is
/// kept in canonical monomial order.
struct DestabRecord {
  OneParamSubgroup lambda;
  std::vector<Monomial> n_plus;   // pairing > 0
  std::vector<Monomial> n_oplus;  // pairing >= 0
  std::vector<Monomial> n_zero;   // pairing == 0
  std::size_t orbit_size = 1;
};

DestabRecord destab_record(const OneParamSubgroup& lambda, const DegreeProfile& profile);

enum class MaximalityKey { NOplus, NPlus };

/// Records whose chosen set is maximal under inclusion among all candidates,
/// one per orbit of identical-factor permutations, sorted by canonical lambda.
std::vector<DestabRecord> maximal_destab_sets(const std::vector<OneParamSubgroup>& candidates,
                                              const DegreeProfile& profile, unsigned jobs = 1,
                                              MaximalityKey key = MaximalityKey::NOplus);

/// Lexicographically least image of lambda under permutations of identical
/// factors, plus the number of distinct images.
OneParamSubgroup canonical_lambda(const OneParamSubgroup& lambda, const DegreeProfile& profile,
                                  std::size_t* orbit_size = nullptr);
DestabRecord symmetry_orbit(const DestabRecord& rec, const DegreeProfile& profile);

/// a is a subset of b; both in canonical order.
bool contains_all(const std::vector<Monomial>& b, const std::vector<Monomial>& a);

/// Applies a permutation of factor positions to a monomial.
Monomial permute_factors(const Monomial& m, const DegreeProfile& profile, const std::vector<std::size_t>& perm);

}  // namespace gitstab
