#pragma once

#include <string>
#include <vector>

#include "gitstab/profile.hpp"
#include "gitstab/rational.hpp"
#include "gitstab/sparse_poly.hpp"

namespace gitstab {

/// Q[h_1..h_k] / (h_i^(n_i+1)) with a top-degree evaluation map. The value of
/// h_i^(n_i) is a stored constant per factor: 1 for P^n, 1/2 for P(1,1,2).
class ChowRing {
 public:
  explicit ChowRing(const DegreeProfile& ambient);

  std::size_t factor_count() const { return dims_.size(); }
  std::size_t dimension() const;
  const std::vector<Rational>& point_normalization() const { return norms_; }

  /// Divisor class sum_i c_i h_i.
  SparsePoly divisor(const std::vector<Rational>& coefficients) const;
  /// Coefficient of prod h_i^(n_i) times the normalizations; everything
  /// else (wrong degree or killed by the relations) contributes zero.
  Rational evaluate(const SparsePoly& cycle) const;
  /// Sum of variable weights per factor.
  SparsePoly anticanonical() const;

 private:
  std::vector<int> dims_;
  std::vector<Rational> norms_;
  std::vector<int> weight_sums_;
};

/// ((-K) - D)^(dim - 1) . D on the ambient: the anticanonical degree of a
/// hypersurface of class D, by adjunction.
Rational anticanonical_degree(const DegreeProfile& ambient, const std::vector<int>& divisor_class);

enum class LedgerRelation { Equal, Less, Greater, LessEqual, GreaterEqual };
std::string to_string(LedgerRelation r);

struct LedgerEntry {
  std::string name;
  Rational computed;
  Rational expected;
  LedgerRelation relation = LedgerRelation::Equal;
  std::string anchor;
  bool passed = false;
};

LedgerEntry make_entry(std::string name, Rational computed, LedgerRelation rel, Rational expected, std::string anchor);

std::vector<LedgerEntry> run_ledger();

}  // namespace gitstab
