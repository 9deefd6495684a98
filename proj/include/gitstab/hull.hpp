#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/ops.hpp"
#include "gitstab/profile.hpp"
#include "gitstab/rational.hpp"

namespace gitstab {

using WeightPoint = std::vector<Rational>;

WeightPoint to_point(const Monomial& m);
std::vector<WeightPoint> to_points(const std::vector<Monomial>& ms);

/// Mean of all exponent vectors of the profile.
WeightPoint centroid_point(const DegreeProfile& profile);

/// Dimension of the affine hull; -1 for the empty set.
int affine_dimension(const std::vector<WeightPoint>& S);

enum class HullPosition { Outside, Boundary, Interior };
std::string to_string(HullPosition h);

/// Position of p relative to conv(S). Interior means relative interior of
/// conv(S) together with dim aff(S) == reference_dimension.
HullPosition hull_membership(const WeightPoint& p, const std::vector<WeightPoint>& S, int reference_dimension);
/// Reference is the affine hull of every monomial of the profile.
HullPosition hull_membership(const WeightPoint& p, const std::vector<WeightPoint>& S, const DegreeProfile& profile);

/// Largest t with p + t(p - b) in conv(S), b the barycenter of S; p must
/// lie in conv(S) and differ from b.
Rational escape_parameter(const WeightPoint& p, const std::vector<WeightPoint>& S);

enum class StabilityClass { Unstable, StrictlySemistable, Stable };
std::string to_string(StabilityClass c);

struct TorusVerdict {
  StabilityClass cls = StabilityClass::Stable;
  HullPosition position = HullPosition::Interior;
  std::optional<OneParamSubgroup> witness;  // Unstable only
};

/// Centroid criterion for a support set. Unweighted profiles only.
TorusVerdict torus_verdict(const std::vector<Monomial>& support, const DegreeProfile& profile);

/// Hilbert-Mumford verdict by direct search over the given subgroups (which
/// should already be closed under the symmetries of the profile).
StabilityClass exhaustive_verdict(const std::vector<Monomial>& support, const std::vector<OneParamSubgroup>& lambdas);

}  // namespace gitstab
