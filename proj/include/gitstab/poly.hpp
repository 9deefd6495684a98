#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gitstab/profile.hpp"
#include "gitstab/rational.hpp"
#include "gitstab/sparse_poly.hpp"

namespace gitstab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DegreeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multihomogeneous polynomial with rational coefficients. Every stored
/// monomial satisfies the profile; zero coefficients are dropped.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit MultiPoly(DegreeProfile profile) : profile_(std::move(profile)) {}

  const DegreeProfile& profile() const { return profile_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Monomial> support() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  bool operator==(const MultiPoly& other) const {
    return profile_ == other.profile_ && terms_ == other.terms_;
  }

  /// Same polynomial as an ordinary polynomial in all homogeneous variables.
  SparsePoly to_sparse() const;

 private:
  DegreeProfile profile_;
  Terms terms_;
};

/// Polynomial text: terms joined by + or -, each an optional coefficient
/// (integer or p/q) followed by *-separated powers name^k.
MultiPoly parse_poly(std::string_view text, const DegreeProfile& profile, const VariableNames& names);
MultiPoly parse_poly(std::string_view text, const DegreeProfile& profile);
/// Same grammar, no degree constraints; constants allowed.
SparsePoly parse_affine(std::string_view text, const VariableNames& names);

std::string monomial_to_string(const Monomial& m, const VariableNames& names);
std::string to_string(const MultiPoly& f, const VariableNames& names);
std::string to_string(const MultiPoly& f);

/// Affine chart: for each factor the index of the variable set to 1.
struct Chart {
  std::vector<std::size_t> pivots;

  void validate(const DegreeProfile& profile) const;
  /// Indices (into the full variable list) of the chart's local coordinates.
  std::vector<std::size_t> local_variables(const DegreeProfile& profile) const;
  bool operator==(const Chart&) const = default;
};

struct ValueAndGradient {
  Rational value;
  std::vector<Rational> gradient;
};

/// Value and gradient of f restricted to the chart, at a point given in
/// local coordinates (variables in profile order, chart variables skipped).
ValueAndGradient evaluate_gradient(const MultiPoly& f, const Chart& chart, const std::vector<Rational>& point);

}  // namespace gitstab
