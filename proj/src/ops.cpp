#include "gitstab/ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gitstab/parallel.hpp"
#include "gitstab/rational.hpp"

namespace gitstab {

OneParamSubgroup::OneParamSubgroup(Weights flat, std::vector<std::size_t> shape)
    : weights_(std::move(flat)), shape_(std::move(shape)) {}

OneParamSubgroup OneParamSubgroup::from_flat(Weights flat, std::vector<std::size_t> shape) {
  if (std::accumulate(shape.begin(), shape.end(), std::size_t{0}) != flat.size())
    throw std::invalid_argument("weight vector does not match factor shape");
  std::size_t offset = 0;
  for (auto n : shape) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += flat[offset + j];
    if (sum != 0) throw std::invalid_argument("one-parameter subgroup weights must sum to zero in each factor");
    offset += n;
  }
  const auto g = gcd_of(flat);
  if (g == 0) throw std::invalid_argument("zero one-parameter subgroup");
  if (g != 1) throw std::invalid_argument("one-parameter subgroup weights must be primitive");
  return OneParamSubgroup(std::move(flat), std::move(shape));
}

OneParamSubgroup OneParamSubgroup::from_factors(const std::vector<Weights>& per_factor) {
  Weights flat;
  std::vector<std::size_t> shape;
  for (const auto& f : per_factor) {
    flat.insert(flat.end(), f.begin(), f.end());
    shape.push_back(f.size());
  }
  return from_flat(std::move(flat), std::move(shape));
}

std::vector<OneParamSubgroup::Weights> OneParamSubgroup::per_factor() const {
  std::vector<Weights> out;
  std::size_t offset = 0;
  for (auto n : shape_) {
    out.emplace_back(weights_.begin() + static_cast<std::ptrdiff_t>(offset),
                     weights_.begin() + static_cast<std::ptrdiff_t>(offset + n));
    offset += n;
  }
  return out;
}

bool OneParamSubgroup::is_normalized() const {
  for (const auto& f : per_factor())
    if (!std::is_sorted(f.begin(), f.end(), std::greater<>())) return false;
  return true;
}

bool OneParamSubgroup::matches(const DegreeProfile& profile) const { return shape_ == shape_of(profile); }

OneParamSubgroup OneParamSubgroup::operator-() const {
  Weights neg(weights_.size());
  std::transform(weights_.begin(), weights_.end(), neg.begin(), std::negate<>());
  return OneParamSubgroup(std::move(neg), shape_);
}

std::string OneParamSubgroup::to_string() const {
  std::string out = "(";
  const auto factors = per_factor();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += "(";
    for (std::size_t j = 0; j < factors[i].size(); ++j) out += (j ? "," : "") + std::to_string(factors[i][j]);
    out += ")";
  }
  return out + ")";
}

std::vector<std::size_t> shape_of(const DegreeProfile& profile) {
  std::vector<std::size_t> shape;
  for (const auto& f : profile.factors()) shape.push_back(f.size());
  return shape;
}

std::int64_t pairing(const OneParamSubgroup& lambda, const Monomial& m) {
  const auto& w = lambda.weights();
  if (w.size() != m.exponents.size()) throw ProfileError("one-parameter subgroup and monomial live on different profiles");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m.exponents[i];
  return s;
}

OneParamSubgroup normalize(const std::vector<OneParamSubgroup::Weights>& raw) {
  OneParamSubgroup::Weights flat;
  std::vector<std::size_t> shape;
  for (auto f : raw) {
    if (std::accumulate(f.begin(), f.end(), std::int64_t{0}) != 0)
      throw std::invalid_argument("weights must sum to zero in each factor");
    std::sort(f.begin(), f.end(), std::greater<>());
    flat.insert(flat.end(), f.begin(), f.end());
    shape.push_back(f.size());
  }
  const auto g = gcd_of(flat);
  if (g == 0) throw std::invalid_argument("cannot normalize the zero weight vector");
  for (auto& w : flat) w /= g;
  return OneParamSubgroup::from_flat(std::move(flat), std::move(shape));
}

OneParamSubgroup normalize(const OneParamSubgroup& lambda) { return normalize(lambda.per_factor()); }

namespace {

using Row = std::vector<std::int64_t>;

// Fraction-free (Bareiss) determinant; all intermediate values are minors of
// the input, so they stay small for monomial-difference matrices.
std::int64_t determinant(std::vector<Row> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = (static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j]) / prev;
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("determinant overflow");
        a[i][j] = static_cast<std::int64_t>(v);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Generator of the kernel of a (D-1) x D integer matrix of full rank, via
// signed maximal minors. Returns the zero vector when rank is deficient.
Row kernel_generator(const std::vector<const Row*>& rows, std::size_t dim) {
  Row out(dim, 0);
  std::vector<Row> minor(rows.size(), Row(rows.size()));
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < dim; ++c)
        if (c != k) minor[r][c2++] = (*rows[r])[c];
    }
    const auto d = determinant(minor);
    out[k] = (k % 2 == 0) ? d : -d;
  }
  return out;
}

}  // namespace

std::vector<OneParamSubgroup> enumerate_candidates(const DegreeProfile& profile, unsigned jobs) {
  if (profile.is_weighted())
    throw ProfileError("candidate enumeration is defined for unweighted factors only");
  const std::size_t dim = profile.torus_dimension();
  if (dim == 0) return {};
  const auto shape = shape_of(profile);

  // Differences of monomials, written in the coordinates mu_j = lambda_j -
  // lambda_last of each factor (the last variable of a factor is dropped).
  const auto monomials = enumerate_monomials(profile);
  std::set<Row> directions;
  for (std::size_t a = 0; a < monomials.size(); ++a) {
    for (std::size_t b = a + 1; b < monomials.size(); ++b) {
      Row r;
      r.reserve(dim);
      for (std::size_t i = 0; i < profile.factor_count(); ++i)
        for (std::size_t j = 0; j + 1 < shape[i]; ++j) {
          const auto v = profile.offset(i) + j;
          r.push_back(monomials[a].exponents[v] - monomials[b].exponents[v]);
        }
      const auto g = gcd_of(r);
      if (g == 0) continue;
      for (auto& x : r) x /= g;
      const auto lead = std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; });
      if (*lead < 0)
        for (auto& x : r) x = -x;
      directions.insert(std::move(r));
    }
  }
  const std::vector<Row> dirs(directions.begin(), directions.end());

  std::int64_t scale = 1;
  for (auto n : shape) scale = std::lcm(scale, static_cast<std::int64_t>(n));

  const auto to_lambda = [&](const Row& mu) {
    OneParamSubgroup::Weights flat;
    std::size_t p = 0;
    for (auto n : shape) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) sum += mu[p + j];
      const std::int64_t last = -sum * (scale / static_cast<std::int64_t>(n));
      for (std::size_t j = 0; j + 1 < n; ++j) flat.push_back(mu[p + j] * scale + last);
      flat.push_back(last);
      p += n - 1;
    }
    return flat;
  };
  const auto emit = [&](const Row& mu, std::set<OneParamSubgroup>& out) {
    if (std::all_of(mu.begin(), mu.end(), [](auto x) { return x == 0; })) return;
    auto flat = to_lambda(mu);
    std::vector<OneParamSubgroup::Weights> factors;
    std::size_t p = 0;
    for (auto n : shape) {
      factors.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(p),
                           flat.begin() + static_cast<std::ptrdiff_t>(p + n));
      p += n;
    }
    out.insert(normalize(factors));
    for (auto& f : factors)
      for (auto& w : f) w = -w;
    out.insert(normalize(factors));
  };

  const std::size_t choose = dim - 1;
  if (choose == 0) {
    std::set<OneParamSubgroup> out;
    emit(Row{1}, out);
    return {out.begin(), out.end()};
  }

  // One task per leading direction; remaining indices chosen increasing.
  std::vector<std::set<OneParamSubgroup>> partial(dirs.size());
  parallel_for(dirs.size(), jobs, [&](std::size_t first) {
    auto& out = partial[first];
    std::vector<std::size_t> idx(choose);
    idx[0] = first;
    std::vector<const Row*> rows(choose);
    rows[0] = &dirs[first];
    // iterative combination walk over idx[1..]
    std::size_t depth = 1;
    if (choose == 1) {
      emit(kernel_generator(rows, dim), out);
      return;
    }
    idx[1] = first;
    while (depth >= 1) {
      ++idx[depth];
      if (idx[depth] + (choose - 1 - depth) >= dirs.size()) {
        --depth;
        continue;
      }
      rows[depth] = &dirs[idx[depth]];
      if (depth + 1 == choose) {
        emit(kernel_generator(rows, dim), out);
      } else {
        ++depth;
        idx[depth] = idx[depth - 1];
      }
    }
  });
  std::set<OneParamSubgroup> merged;
  for (auto& s : partial) merged.insert(s.begin(), s.end());
  return {merged.begin(), merged.end()};
}

std::vector<std::vector<std::size_t>> factor_symmetries(const DegreeProfile& profile) {
  std::vector<std::size_t> perm(profile.factor_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = profile.factor(perm[i]) == profile.factor(i);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

OneParamSubgroup permute_factors(const OneParamSubgroup& lambda, const std::vector<std::size_t>& perm) {
  const auto factors = lambda.per_factor();
  if (perm.size() != factors.size()) throw std::invalid_argument("factor permutation has wrong length");
  std::vector<OneParamSubgroup::Weights> out;
  for (auto p : perm) out.push_back(factors.at(p));
  return OneParamSubgroup::from_factors(out);
}

std::vector<OneParamSubgroup> symmetry_images(const OneParamSubgroup& lambda, const DegreeProfile& profile) {
  if (!lambda.matches(profile)) throw ProfileError("one-parameter subgroup does not match profile");
  const auto factors = lambda.per_factor();
  // distinct rearrangements of each factor that respect variable weights
  std::vector<std::vector<OneParamSubgroup::Weights>> choices(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& weights = profile.factor(i).weights;
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::set<OneParamSubgroup::Weights> seen;
    do {
      bool ok = true;
      for (std::size_t j = 0; j < order.size() && ok; ++j) ok = weights[order[j]] == weights[j];
      if (!ok) continue;
      OneParamSubgroup::Weights w;
      for (auto j : order) w.push_back(factors[i][j]);
      seen.insert(std::move(w));
    } while (std::next_permutation(order.begin(), order.end()));
    choices[i].assign(seen.begin(), seen.end());
  }
  std::set<OneParamSubgroup> images;
  std::vector<std::size_t> pick(factors.size(), 0);
  const auto symmetries = factor_symmetries(profile);
  while (true) {
    std::vector<OneParamSubgroup::Weights> combo;
    for (std::size_t i = 0; i < factors.size(); ++i) combo.push_back(choices[i][pick[i]]);
    const auto base = OneParamSubgroup::from_factors(combo);
    for (const auto& perm : symmetries) images.insert(permute_factors(base, perm));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return {images.begin(), images.end()};
}

}  // namespace gitstab
