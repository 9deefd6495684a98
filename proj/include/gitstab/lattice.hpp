#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

using LatticeVector = std::vector<std::int64_t>;

class IntegralLattice {
 public:
  IntegralLattice(std::vector<std::string> basis_names, std::vector<std::vector<std::int64_t>> gram);

  /// H1, H2, H3 with Gram rows (0,2,3), (2,0,3), (3,3,2).
  static IntegralLattice lambda0();

  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
  std::size_t rank() const { return names_.size(); }
  bool is_even() const;

  std::int64_t qform(const LatticeVector& v) const;
  std::int64_t pairing(const LatticeVector& v, const LatticeVector& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::int64_t>> gram_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Inertia by symmetric Gaussian elimination over Q.
Signature signature(const IntegralLattice& L);
Signature signature(std::vector<std::vector<Rational>> symmetric);

/// Every v with max |v_i| <= bound, qform(v) = 0 and pairing(ell, v) = target,
/// excluding zero, in lexicographic order.
std::vector<LatticeVector> search_isotropic(const IntegralLattice& L, const LatticeVector& ell, std::int64_t target,
                                            std::int64_t bound, unsigned jobs = 1);

struct UnigonalCertificate {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::size_t checked = 0;                   // values s = 5 mod 8 in range
  std::vector<std::int64_t> counterexamples;  // 63 s^2 - 14 s - 1 <= 0
  std::vector<std::int64_t> integral_t;      // s with (95 s^2 - 14 s - 1)/128 integral
  bool identity_holds = true;                // s^2 - 4t = -(63 s^2 - 14 s - 1)/32
  bool passed() const { return checked > 0 && counterexamples.empty() && identity_holds; }
};
UnigonalCertificate unigonal_certificate(std::int64_t lo, std::int64_t hi);

struct DegenerationCheck {
  std::int64_t l_dot_gamma = 0;
  std::int64_t l_dot_gamma_prime = 0;
  std::int64_t gamma_prime_square = 0;
  std::int64_t quoted_gamma_prime_square = -2;
  bool quoted_value_matches() const { return gamma_prime_square == quoted_gamma_prime_square; }
};
/// Gamma = H3, Gamma' = H1 + H2 - H3 in lambda0, L = H1 + H2 + H3.
DegenerationCheck degeneration_obstruction_check();

}  // namespace gitstab
