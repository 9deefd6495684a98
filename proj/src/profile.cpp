#include "gitstab/profile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <json.hpp>

namespace gitstab {

bool Factor::unweighted() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

int Factor::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0); }

DegreeProfile::DegreeProfile(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ProfileError("profile needs at least one factor");
  for (const auto& f : factors_) {
    if (f.weights.empty()) throw ProfileError("factor with no variables");
    if (f.degree < 1) throw ProfileError("factor degree must be at least 1");
    for (int w : f.weights)
      if (w < 1) throw ProfileError("variable weights must be positive");
    offsets_.push_back(variable_count_);
    variable_count_ += f.size();
  }
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ProfileError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

DegreeProfile DegreeProfile::parse(std::string_view spec) {
  std::vector<Factor> factors;
  std::size_t pos = 0;
  spec = trim(spec);
  while (pos < spec.size()) {
    // factor token runs to the next comma outside parentheses
    std::size_t end = pos;
    int depth = 0;
    while (end < spec.size() && (spec[end] != ',' || depth > 0)) {
      if (spec[end] == '(') ++depth;
      if (spec[end] == ')') --depth;
      ++end;
    }
    std::string_view token = trim(spec.substr(pos, end - pos));
    pos = end + 1;
    if (token.empty() || (token[0] != 'p' && token[0] != 'P'))
      throw ProfileError("factor must start with 'p': '" + std::string(token) + "'");
    const auto colon = token.rfind(':');
    if (colon == std::string_view::npos)
      throw ProfileError("factor missing ':degree': '" + std::string(token) + "'");
    Factor f;
    f.degree = parse_int(trim(token.substr(colon + 1)), "degree");
    std::string_view space = trim(token.substr(1, colon - 1));
    if (!space.empty() && space.front() == '(') {
      if (space.back() != ')') throw ProfileError("unbalanced weights in '" + std::string(token) + "'");
      space = space.substr(1, space.size() - 2);
      std::size_t p = 0;
      while (p <= space.size()) {
        auto comma = space.find(',', p);
        if (comma == std::string_view::npos) comma = space.size();
        f.weights.push_back(parse_int(trim(space.substr(p, comma - p)), "weight"));
        p = comma + 1;
      }
    } else {
      const int n = parse_int(space, "dimension");
      if (n < 0) throw ProfileError("negative dimension");
      f.weights.assign(static_cast<std::size_t>(n) + 1, 1);
    }
    factors.push_back(std::move(f));
  }
  return DegreeProfile(std::move(factors));
}

std::string DegreeProfile::spec() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (i) out += ',';
    if (f.unweighted()) {
      out += "p" + std::to_string(f.dimension());
    } else {
      out += "p(";
      for (std::size_t j = 0; j < f.size(); ++j) out += (j ? "," : "") + std::to_string(f.weights[j]);
      out += ")";
    }
    out += ":" + std::to_string(f.degree);
  }
  return out;
}

std::size_t DegreeProfile::torus_dimension() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.dimension();
  return d;
}

bool DegreeProfile::is_weighted() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return !f.unweighted(); });
}

bool satisfies_profile(const Monomial& m, const DegreeProfile& profile) {
  if (m.exponents.size() != profile.variable_count()) return false;
  for (std::size_t i = 0; i < profile.factor_count(); ++i) {
    const auto& f = profile.factor(i);
    int sum = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const int e = m.exponents[profile.offset(i) + j];
      if (e < 0) return false;
      sum += f.weights[j] * e;
    }
    if (sum != f.degree) return false;
  }
  return true;
}

void require_profile(const Monomial& m, const DegreeProfile& profile) {
  if (!satisfies_profile(m, profile)) throw ProfileError("monomial does not match profile " + profile.spec());
}

namespace {

// Exponent vectors of one factor in descending lexicographic order.
void factor_exponents(const Factor& f, std::size_t j, int remaining, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (j + 1 == f.size()) {
    if (remaining % f.weights[j] == 0) {
      current[j] = remaining / f.weights[j];
      out.push_back(current);
    }
    return;
  }
  for (int e = remaining / f.weights[j]; e >= 0; --e) {
    current[j] = e;
    factor_exponents(f, j + 1, remaining - e * f.weights[j], current, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const DegreeProfile& profile) {
  std::vector<Monomial> result{Monomial{}};
  for (const auto& f : profile.factors()) {
    std::vector<std::vector<int>> local;
    std::vector<int> current(f.size(), 0);
    factor_exponents(f, 0, f.degree, current, local);
    std::vector<Monomial> next;
    next.reserve(result.size() * local.size());
    for (const auto& prefix : result) {
      for (const auto& e : local) {
        Monomial m = prefix;
        m.exponents.insert(m.exponents.end(), e.begin(), e.end());
        next.push_back(std::move(m));
      }
    }
    result = std::move(next);
  }
  return result;
}

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ProfileError("duplicate variable name");
}

VariableNames VariableNames::defaults(const DegreeProfile& profile) {
  static constexpr std::string_view letters = "xyzuvws";
  if (profile.factor_count() > letters.size())
    throw ProfileError("default variable names cover at most 7 factors");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < profile.factor_count(); ++i)
    for (std::size_t j = 0; j < profile.factor(i).size(); ++j)
      names.push_back(std::string(1, letters[i]) + std::to_string(j));
  return VariableNames(std::move(names));
}

std::size_t VariableNames::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

ProfileManifest load_profile_manifest(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ProfileError(std::string("profile manifest: ") + e.what());
  }
  if (!doc.contains("factors") || !doc["factors"].is_array())
    throw ProfileError("profile manifest needs a 'factors' array");
  std::vector<Factor> factors;
  std::vector<std::string> names;
  bool has_names = true;
  for (const auto& entry : doc["factors"]) {
    Factor f;
    f.degree = entry.at("degree").get<int>();
    if (entry.contains("weights")) {
      f.weights = entry["weights"].get<std::vector<int>>();
    } else {
      f.weights.assign(entry.at("dimension").get<std::size_t>() + 1, 1);
    }
    if (entry.contains("variables")) {
      auto vs = entry["variables"].get<std::vector<std::string>>();
      if (vs.size() != f.size()) throw ProfileError("variable list length does not match factor size");
      names.insert(names.end(), vs.begin(), vs.end());
    } else {
      has_names = false;
    }
    factors.push_back(std::move(f));
  }
  DegreeProfile profile(std::move(factors));
  return {profile, has_names ? VariableNames(std::move(names)) : VariableNames::defaults(profile)};
}

}  // namespace gitstab
