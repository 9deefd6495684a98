#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/destab.hpp"
#include "gitstab/hull.hpp"
#include "gitstab/poly.hpp"

namespace gitstab {

struct Family {
  std::vector<Monomial> support;
  DegreeProfile profile;
  std::string label;
};

Family make_family(std::vector<Monomial> support, DegreeProfile profile, std::string label);

struct Verdict {
  StabilityClass cls = StabilityClass::Stable;
  std::optional<OneParamSubgroup> witness;
  /// Index into the record list, and the coordinate image of that record's
  /// subgroup whose nonnegative set actually contains the support.
  std::optional<std::size_t> containing_record;
  std::optional<OneParamSubgroup> containing_image;
};

/// Stable unless the support sits inside the nonnegative set of some image
/// (variable permutations within factors, identical-factor swaps) of a
/// maximal record; otherwise the centroid criterion decides.
Verdict classify_family(const Family& fam, const std::vector<DestabRecord>& records);

/// Torus verdict of supp(f) in the given coordinates.
Verdict classify_divisor(const MultiPoly& f, const std::vector<DestabRecord>& records);

/// One family per record whose nonnegative set is strictly semistable,
/// supported on the zero-weight monomials.
std::vector<Family> polystable_candidates(const std::vector<DestabRecord>& records, const DegreeProfile& profile);

}  // namespace gitstab
