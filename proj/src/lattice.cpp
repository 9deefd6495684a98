#include "gitstab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "gitstab/parallel.hpp"

namespace gitstab {

IntegralLattice::IntegralLattice(std::vector<std::string> basis_names, std::vector<std::vector<std::int64_t>> gram)
    : names_(std::move(basis_names)), gram_(std::move(gram)) {
  if (gram_.size() != names_.size()) throw std::invalid_argument("Gram matrix size differs from basis");
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != names_.size()) throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
  }
}

IntegralLattice IntegralLattice::lambda0() { return IntegralLattice({"H1", "H2", "H3"}, {{0, 2, 3}, {2, 0, 3}, {3, 3, 2}}); }

bool IntegralLattice::is_even() const {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

std::int64_t IntegralLattice::pairing(const LatticeVector& v, const LatticeVector& w) const {
  if (v.size() != rank() || w.size() != rank()) throw std::invalid_argument("lattice vector has wrong length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_[i][j] * w[j];
  return s;
}

std::int64_t IntegralLattice::qform(const LatticeVector& v) const { return pairing(v, v); }

Signature signature(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  Signature sig;
  std::size_t k = 0;
  // congruence a -> P a P^T, processing index k
  while (k < n) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p < n) {
      std::swap(a[k], a[p]);
      for (auto& row : a) std::swap(row[k], row[p]);
    } else {
      std::size_t q = n;
      for (std::size_t i = k; i < n && q == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            // e_i <- e_i + e_j makes the diagonal 2 a_ij
            for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
            for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
            q = i;
            break;
          }
      if (q == n) {
        sig.zero += n - k;
        return sig;
      }
      std::swap(a[k], a[q]);
      for (auto& row : a) std::swap(row[k], row[q]);
    }
    const Rational d = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / d;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    (d > 0 ? sig.positive : sig.negative) += 1;
    ++k;
  }
  return sig;
}

Signature signature(const IntegralLattice& L) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : L.gram()) {
    std::vector<Rational> r;
    for (auto v : row) r.emplace_back(v);
    a.push_back(std::move(r));
  }
  return signature(std::move(a));
}

std::vector<LatticeVector> search_isotropic(const IntegralLattice& L, const LatticeVector& ell, std::int64_t target,
                                            std::int64_t bound, unsigned jobs) {
  if (bound < 0) throw std::invalid_argument("search bound must be non-negative");
  if (ell.size() != L.rank()) throw std::invalid_argument("lattice vector has wrong length");
  const std::size_t n = L.rank();
  if (n == 0) return {};
  const auto width = static_cast<std::size_t>(2 * bound + 1);
  std::vector<std::vector<LatticeVector>> slabs(width);
  parallel_for(width, jobs, [&](std::size_t s) {
    LatticeVector v(n, -bound);
    v[0] = -bound + static_cast<std::int64_t>(s);
    while (true) {
      if (L.qform(v) == 0 && L.pairing(ell, v) == target &&
          std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; }))
        slabs[s].push_back(v);
      std::size_t i = n - 1;
      while (i > 0 && v[i] == bound) v[i--] = -bound;
      if (i == 0) break;
      ++v[i];
    }
  });
  std::vector<LatticeVector> out;
  for (auto& s : slabs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

UnigonalCertificate unigonal_certificate(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  UnigonalCertificate cert{lo, hi, 0, {}, {}, true};
  for (std::int64_t s = lo; s <= hi; ++s) {
    if (((s % 8) + 8) % 8 != 5) continue;
    ++cert.checked;
    const Integer S = s;
    const Integer disc = 63 * S * S - 14 * S - 1;
    if (disc <= 0) cert.counterexamples.push_back(s);
    const Rational t(Integer(95 * S * S - 14 * S - 1), Integer(128));
    Rational t_canon = t;
    t_canon.canonicalize();
    if (t_canon.get_den() == 1) cert.integral_t.push_back(s);
    Rational lhs = Rational(S * S) - 4 * t_canon;
    Rational rhs(-disc, Integer(32));
    rhs.canonicalize();
    if (lhs != rhs) cert.identity_holds = false;
  }
  return cert;
}

DegenerationCheck degeneration_obstruction_check() {
  const auto L0 = IntegralLattice::lambda0();
  const LatticeVector L{1, 1, 1}, gamma{0, 0, 1}, gamma_prime{1, 1, -1};
  DegenerationCheck d;
  d.l_dot_gamma = L0.pairing(L, gamma);
  d.l_dot_gamma_prime = L0.pairing(L, gamma_prime);
  d.gamma_prime_square = L0.qform(gamma_prime);
  return d;
}

}  // namespace gitstab
