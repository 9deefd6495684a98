#include "gitstab/sparse_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace gitstab {

namespace {
int total_degree(const SparsePoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

SparsePoly SparsePoly::constant(std::size_t variables, const Rational& c) {
  SparsePoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("variable index");
  Exponents e(variables, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

SparsePoly SparsePoly::monomial(Exponents e, const Rational& c) {
  SparsePoly p(e.size());
  p.add_term(e, c);
  return p;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::min_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    const int d = total_degree(e);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int SparsePoly::max_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
  return best;
}

SparsePoly SparsePoly::homogeneous_part(int degree) const {
  SparsePoly out(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

SparsePoly SparsePoly::truncated(int max_degree) const {
  SparsePoly out(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

SparsePoly SparsePoly::derivative(std::size_t index) const {
  if (index >= variables_) throw std::out_of_range("variable index");
  SparsePoly out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != variables_) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = constant(variables_, 1);
  SparsePoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images) const {
  if (images.size() != variables_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t target = images.empty() ? 0 : images.front().variables();
  for (const auto& img : images)
    if (img.variables() != target) throw std::invalid_argument("substitution images disagree on variables");
  // cache powers of each image
  std::vector<std::vector<SparsePoly>> powers(variables_);
  SparsePoly out(target);
  for (const auto& [e, c] : terms_) {
    SparsePoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.variables_ != b.variables_) throw std::invalid_argument("variable count mismatch");
  SparsePoly out(a.variables_);
  SparsePoly::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace gitstab
