#include "gitstab/sing.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "gitstab/parallel.hpp"

namespace gitstab {

namespace {

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

void ChartPoint::validate(const DegreeProfile& profile) const {
  const auto local = chart.local_variables(profile);
  if (coordinates.size() != local.size())
    throw std::invalid_argument("chart point has " + std::to_string(coordinates.size()) + " coordinates, expected " +
                                std::to_string(local.size()));
}

ChartPoint ChartPoint::from_homogeneous(const DegreeProfile& profile, const std::vector<std::vector<Rational>>& coords) {
  if (coords.size() != profile.factor_count()) throw std::invalid_argument("point needs one coordinate block per factor");
  ChartPoint p;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& block = coords[i];
    const auto& fac = profile.factor(i);
    if (block.size() != fac.size()) throw std::invalid_argument("coordinate block has wrong length");
    const auto it = std::find_if(block.begin(), block.end(), [](const Rational& x) { return x != 0; });
    if (it == block.end()) throw std::invalid_argument("all coordinates of a factor are zero");
    const auto pivot = static_cast<std::size_t>(it - block.begin());
    if (fac.weights[pivot] != 1) throw ChartEscapeError("chart pivot must be a weight-one variable");
    p.chart.pivots.push_back(pivot);
    for (std::size_t j = 0; j < block.size(); ++j)
      if (j != pivot) p.coordinates.push_back(block[j] / power(*it, fac.weights[j]));
  }
  return p;
}

std::vector<std::vector<Rational>> ChartPoint::homogeneous(const DegreeProfile& profile) const {
  validate(profile);
  std::vector<std::vector<Rational>> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < profile.factor_count(); ++i) {
    std::vector<Rational> block;
    for (std::size_t j = 0; j < profile.factor(i).size(); ++j) block.push_back(j == chart.pivots[i] ? Rational(1) : coordinates[k++]);
    out.push_back(std::move(block));
  }
  return out;
}

std::string to_string(const ChartPoint& p, const DegreeProfile& profile) {
  std::string s = "[";
  const auto h = p.homogeneous(profile);
  for (std::size_t i = 0; i < h.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < h[i].size(); ++j) s += (j ? ":" : "") + to_string(h[i][j]);
    s += "]";
  }
  return s + "]";
}

ChartPoint parse_point(std::string_view text, const DegreeProfile& profile) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  const auto bad = [&] { return std::invalid_argument("malformed point '" + std::string(text) + "'"); };
  if (t.size() < 4 || t.front() != '[' || t.back() != ']') throw bad();
  std::vector<std::vector<Rational>> blocks;
  std::size_t i = 1;
  while (i + 1 < t.size()) {
    if (t[i] != '[') throw bad();
    const auto close = t.find(']', i);
    if (close == std::string::npos) throw bad();
    std::vector<Rational> block;
    std::string_view inner(t.data() + i + 1, close - i - 1);
    std::size_t start = 0;
    while (true) {
      const auto colon = inner.find(':', start);
      block.push_back(parse_rational(inner.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start)));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    blocks.push_back(std::move(block));
    i = close + 1;
    if (i + 1 < t.size()) {
      if (t[i] != ',') throw bad();
      ++i;
    }
  }
  return ChartPoint::from_homogeneous(profile, blocks);
}

SparsePoly local_expansion(const MultiPoly& f, const ChartPoint& p) {
  const auto& profile = f.profile();
  p.validate(profile);
  const auto local = p.chart.local_variables(profile);
  const std::size_t d = local.size();
  std::vector<SparsePoly> images(profile.variable_count(), SparsePoly::constant(d, 1));
  for (std::size_t k = 0; k < d; ++k)
    images[local[k]] = SparsePoly::constant(d, p.coordinates[k]) + SparsePoly::variable(d, k);
  return f.to_sparse().substitute(images);
}

bool is_singular_at(const MultiPoly& f, const ChartPoint& p) {
  const auto g = local_expansion(f, p);
  return g.is_zero() || g.min_degree() >= 2;
}

int multiplicity(const MultiPoly& f, const ChartPoint& p) {
  const auto g = local_expansion(f, p);
  if (g.is_zero()) throw std::invalid_argument("polynomial vanishes identically");
  return g.min_degree();
}

std::size_t hessian_corank(const SparsePoly& g) {
  const std::size_t d = g.variables();
  if (!g.is_zero() && g.min_degree() < 2) throw std::invalid_argument("Hessian corank requested at a non-singular point");
  std::vector<std::vector<Rational>> h(d, std::vector<Rational>(d, 0));
  const auto quadratic = g.homogeneous_part(2);
  for (const auto& [e, c] : quadratic.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      h[idx[0]][idx[0]] = 2 * c;
    } else {
      h[idx[0]][idx[1]] = c;
      h[idx[1]][idx[0]] = c;
    }
  }
  return d - matrix_rank(std::move(h));
}

std::size_t hessian_corank(const MultiPoly& f, const ChartPoint& p) { return hessian_corank(local_expansion(f, p)); }

namespace {

// All exponent vectors of total degree <= k in d variables, degree-ascending.
std::vector<SparsePoly::Exponents> monomials_up_to(std::size_t d, int k) {
  std::vector<SparsePoly::Exponents> out;
  SparsePoly::Exponents e(d, 0);
  for (int deg = 0; deg <= k; ++deg) {
    // compositions of deg into d parts
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == d) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = a;
        rec(i + 1, left - a);
      }
    };
    if (d == 0) {
      if (deg == 0) out.push_back(e);
    } else {
      rec(0, deg);
    }
  }
  return out;
}

using SparseRow = std::map<std::size_t, Rational>;

class Echelon {
 public:
  // returns true if the row increased the rank
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const auto lead = row.begin()->first;
      const auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / row.begin()->second;
        for (auto& [k, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational f = row.begin()->second;
      for (const auto& [k, v] : it->second) {
        auto& slot = row[k];
        slot -= f * v;
        if (slot == 0) row.erase(k);
      }
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::size_t local_algebra_dimension(const SparsePoly& g, int degree) {
  const std::size_t d = g.variables();
  const auto basis = monomials_up_to(d, degree);
  std::map<SparsePoly::Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  Echelon ech;
  for (std::size_t v = 0; v < d; ++v) {
    const auto partial = g.derivative(v).truncated(degree);
    if (partial.is_zero()) continue;
    const int low = partial.min_degree();
    for (const auto& a : basis) {
      int deg_a = 0;
      for (auto x : a) deg_a += x;
      if (deg_a + low > degree) break;  // basis is degree-ascending
      SparseRow row;
      for (const auto& [e, c] : partial.terms()) {
        int total = deg_a;
        auto shifted = e;
        for (std::size_t i = 0; i < d; ++i) {
          shifted[i] += a[i];
          total += e[i];
        }
        if (total > degree) continue;
        row.emplace(index.at(shifted), c);
      }
      ech.insert(std::move(row));
      if (ech.rank() == basis.size()) return 0;
    }
  }
  return basis.size() - ech.rank();
}

MilnorResult milnor_number(const SparsePoly& g, int truncation) {
  if (truncation < 4) throw std::invalid_argument("truncation degree must be at least 4");
  if (!g.is_zero() && g.min_degree() < 2) throw std::invalid_argument("Milnor number requested at a non-singular point");
  MilnorResult r;
  r.truncation = truncation;
  const auto lower = local_algebra_dimension(g, truncation - 1);
  const auto upper = local_algebra_dimension(g, truncation);
  if (lower == upper) {
    r.status = MilnorResult::Status::Finite;
    r.value = upper;
  }
  return r;
}

MilnorResult milnor_number(const MultiPoly& f, const ChartPoint& p, int truncation) {
  return milnor_number(local_expansion(f, p), truncation);
}

std::string to_string(const MilnorResult& m) {
  switch (m.status) {
    case MilnorResult::Status::Finite: return std::to_string(m.value);
    case MilnorResult::Status::NotStabilized: return "NotStabilized";
    case MilnorResult::Status::Infinite: return "Infinite";
  }
  return "?";
}

std::string ade_classify(std::size_t corank, const MilnorResult& milnor) {
  if (milnor.status != MilnorResult::Status::Finite) return "Unclassified";
  if (corank <= 1 && milnor.value >= 1) return "A_" + std::to_string(milnor.value);
  if (corank == 2 && milnor.value == 4) return "D_4";
  return "Unclassified";
}

SingularityReport analyze_point(const MultiPoly& f, const ChartPoint& p, int truncation) {
  SingularityReport rep;
  rep.point = p;
  const auto g = local_expansion(f, p);
  if (g.is_zero()) throw std::invalid_argument("polynomial vanishes identically");
  rep.multiplicity = g.min_degree();
  rep.on_hypersurface = rep.multiplicity > 0;
  rep.is_singular = rep.multiplicity >= 2;
  if (!rep.on_hypersurface) {
    rep.label = "NotOnHypersurface";
    return rep;
  }
  if (!rep.is_singular) {
    rep.label = "Smooth";
    return rep;
  }
  rep.hessian_corank = hessian_corank(g);
  auto mu = milnor_number(g, truncation);
  if (mu.status != MilnorResult::Status::Finite) mu = milnor_number(g, truncation + 4);
  rep.milnor = mu;
  rep.label = ade_classify(*rep.hessian_corank, mu);
  return rep;
}

std::vector<SingularityReport> scan_pattern(const MultiPoly& f, const std::vector<ChartPoint>& pattern, int truncation,
                                            unsigned jobs) {
  std::vector<std::optional<SingularityReport>> slots(pattern.size());
  parallel_for(pattern.size(), jobs, [&](std::size_t i) { slots[i] = analyze_point(f, pattern[i], truncation); });
  std::vector<SingularityReport> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

// f along locus + t: variables are (parameters..., local offsets...).
SparsePoly expansion_along(const MultiPoly& f, const Locus& locus) {
  const auto& profile = f.profile();
  const auto local = locus.chart.local_variables(profile);
  if (locus.coordinates.size() != profile.variable_count())
    throw std::invalid_argument("locus needs one coordinate polynomial per variable");
  const std::size_t total = locus.parameters + local.size();
  std::vector<SparsePoly> lifted;
  for (const auto& c : locus.coordinates) {
    if (c.variables() != locus.parameters) throw std::invalid_argument("locus coordinate has wrong parameter count");
    SparsePoly up(total);
    for (const auto& [e, v] : c.terms()) {
      auto ee = e;
      ee.resize(total, 0);
      up.add_term(ee, v);
    }
    lifted.push_back(std::move(up));
  }
  std::vector<SparsePoly> images(profile.variable_count(), SparsePoly::constant(total, 1));
  std::size_t k = 0;
  for (std::size_t i = 0; i < profile.factor_count(); ++i) {
    const auto pivot = profile.offset(i) + locus.chart.pivots[i];
    const auto& pc = locus.coordinates[pivot];
    if (pc.is_zero() || pc.max_degree() != 0)
      throw ChartEscapeError("locus leaves the chart: pivot coordinate is not a nonzero constant");
    const Rational scale = pc.coefficient(SparsePoly::Exponents(locus.parameters, 0));
    for (std::size_t j = 0; j < profile.factor(i).size(); ++j) {
      const auto v = profile.offset(i) + j;
      if (j == locus.chart.pivots[i]) continue;
      images[v] = lifted[v] * (1 / power(scale, profile.factor(i).weights[j])) +
                  SparsePoly::variable(total, locus.parameters + k);
      ++k;
    }
  }
  return f.to_sparse().substitute(images);
}

}  // namespace

int multiplicity_along(const MultiPoly& f, const Locus& locus) {
  if (f.is_zero()) throw std::invalid_argument("polynomial vanishes identically");
  const auto g = expansion_along(f, locus);
  int best = -1;
  for (const auto& [e, c] : g.terms()) {
    int order = 0;
    for (std::size_t i = locus.parameters; i < e.size(); ++i) order += e[i];
    if (best < 0 || order < best) best = order;
  }
  return best;
}

bool verify_nonisolated(const MultiPoly& f, const Locus& locus) {
  const bool moving = std::any_of(locus.coordinates.begin(), locus.coordinates.end(),
                                  [](const SparsePoly& c) { return c.max_degree() > 0; });
  if (!moving) return false;
  return multiplicity_along(f, locus) >= 2;
}

namespace {

std::vector<Rational> gradient3(const SparsePoly& q, const std::vector<Rational>& p) {
  return {q.derivative(0).evaluate(p), q.derivative(1).evaluate(p), q.derivative(2).evaluate(p)};
}

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool smooth_conic(const SparsePoly& q) {
  if (q.variables() != 3 || q.min_degree() != 2 || q.max_degree() != 2) return false;
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3, 0));
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] = c;
    } else {
      m[idx[0]][idx[1]] = c / 2;
      m[idx[1]][idx[0]] = c / 2;
    }
  }
  return matrix_rank(m) == 3;
}

}  // namespace

ConicCertificate certify_conic_pair(const SparsePoly& q1, const SparsePoly& q2, const SparsePoly& third,
                                    const std::vector<std::vector<Rational>>& points) {
  ConicCertificate cert;
  cert.first_smooth = smooth_conic(q1);
  cert.second_smooth = smooth_conic(q2);
  for (const auto& p : points)
    if (p.size() != 3 || is_zero_vector(p)) throw std::invalid_argument("conic points need three coordinates, not all zero");
  cert.points_on_both = std::all_of(points.begin(), points.end(),
                                    [&](const auto& p) { return q1.evaluate(p) == 0 && q2.evaluate(p) == 0; });
  cert.points_distinct = true;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (is_zero_vector(cross(points[i], points[j]))) cert.points_distinct = false;
  cert.transverse = std::all_of(points.begin(), points.end(),
                                [&](const auto& p) { return !is_zero_vector(cross(gradient3(q1, p), gradient3(q2, p))); });
  // two conics without a common component meet in 4 points with multiplicity
  cert.complete = cert.first_smooth && cert.second_smooth && cert.points_on_both && cert.points_distinct &&
                  cert.transverse && points.size() == 4;
  cert.third_avoided = std::all_of(points.begin(), points.end(), [&](const auto& p) { return third.evaluate(p) != 0; });
  return cert;
}

}  // namespace gitstab
