#pragma once

#include <map>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

/// Polynomial over Q in a fixed number of variables, not necessarily
/// homogeneous. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit SparsePoly(std::size_t variables = 0) : variables_(variables) {}

  static SparsePoly constant(std::size_t variables, const Rational& c);
  static SparsePoly variable(std::size_t variables, std::size_t index);
  static SparsePoly monomial(Exponents e, const Rational& c);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  /// Lowest total degree of a stored term; -1 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  SparsePoly homogeneous_part(int degree) const;
  SparsePoly truncated(int max_degree) const;

  SparsePoly derivative(std::size_t index) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Composition: variable i is replaced by images[i]; all images share a
  /// variable count, which becomes the result's.
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;
  SparsePoly pow(unsigned exponent) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  bool operator==(const SparsePoly& other) const {
    return variables_ == other.variables_ && terms_ == other.terms_;
  }

 private:
  std::size_t variables_;
  Terms terms_;
};

}  // namespace gitstab
