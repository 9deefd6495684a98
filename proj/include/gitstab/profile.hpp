#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gitstab {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One (weighted) projective factor: one weight per homogeneous variable
/// plus the degree of the hypersurface in that factor.
struct Factor {
  std::vector<int> weights;
  int degree = 1;

  std::size_t size() const { return weights.size(); }
  std::size_t dimension() const { return weights.size() - 1; }
  bool unweighted() const;
  int weight_sum() const;
  bool operator==(const Factor&) const = default;
};

/// Product of (weighted) projective spaces together with a multidegree.
class DegreeProfile {
 public:
  DegreeProfile() = default;
  explicit DegreeProfile(std::vector<Factor> factors);

  /// Parses "p1:1,p1:1,p2:2"; weighted factors are written "p(1,1,2):2".
  static DegreeProfile parse(std::string_view spec);
  std::string spec() const;

  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t factor_count() const { return factors_.size(); }
  std::size_t variable_count() const { return variable_count_; }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  /// Number of torus directions: sum over factors of (variables - 1).
  std::size_t torus_dimension() const;
  bool is_weighted() const;

  bool operator==(const DegreeProfile& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t variable_count_ = 0;
};

/// Exponent vector over all variables of a profile, factors concatenated.
struct Monomial {
  std::vector<int> exponents;

  bool operator==(const Monomial&) const = default;
  /// Canonical order: factor by factor, lexicographically larger exponent
  /// vectors first (x0^2 before x0*x1 before x1^2).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; }
};

bool satisfies_profile(const Monomial& m, const DegreeProfile& profile);
void require_profile(const Monomial& m, const DegreeProfile& profile);

/// All monomials of the profile in canonical order.
std::vector<Monomial> enumerate_monomials(const DegreeProfile& profile);

/// Variable names for the polynomial grammar. Defaults are the factor letters
/// x, y, z, u, v, w, s with zero-based subscripts.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names);
  static VariableNames defaults(const DegreeProfile& profile);

  const std::string& operator[](std::size_t i) const { return names_.at(i); }
  std::size_t size() const { return names_.size(); }
  /// Returns variable_count-sized sentinel if unknown.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Profile plus variable names read from a JSON manifest of the form
/// {"factors": [{"weights": [1,1], "degree": 1, "variables": ["x0","x1"]}, ...]}.
struct ProfileManifest {
  DegreeProfile profile;
  VariableNames names;
};
ProfileManifest load_profile_manifest(std::string_view json_text);

}  // namespace gitstab
