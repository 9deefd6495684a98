#include "gitstab/destab.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "gitstab/parallel.hpp"

namespace gitstab {

DestabRecord destab_record(const OneParamSubgroup& lambda, const DegreeProfile& profile) {
  if (!lambda.matches(profile)) throw ProfileError("one-parameter subgroup does not match profile " + profile.spec());
  DestabRecord rec{lambda, {}, {}, {}, 1};
  for (const auto& m : enumerate_monomials(profile)) {
    const auto w = pairing(lambda, m);
    if (w > 0) rec.n_plus.push_back(m);
    if (w >= 0) rec.n_oplus.push_back(m);
    if (w == 0) rec.n_zero.push_back(m);
  }
  return rec;
}

bool contains_all(const std::vector<Monomial>& b, const std::vector<Monomial>& a) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Monomial permute_factors(const Monomial& m, const DegreeProfile& profile, const std::vector<std::size_t>& perm) {
  Monomial out;
  out.exponents.reserve(m.exponents.size());
  for (auto p : perm) {
    const auto off = profile.offset(p);
    for (std::size_t j = 0; j < profile.factor(p).size(); ++j) out.exponents.push_back(m.exponents[off + j]);
  }
  return out;
}

OneParamSubgroup canonical_lambda(const OneParamSubgroup& lambda, const DegreeProfile& profile,
                                  std::size_t* orbit_size) {
  std::set<OneParamSubgroup> images;
  for (const auto& perm : factor_symmetries(profile)) images.insert(permute_factors(lambda, perm));
  if (orbit_size) *orbit_size = images.size();
  return *images.begin();
}

DestabRecord symmetry_orbit(const DestabRecord& rec, const DegreeProfile& profile) {
  std::size_t size = 1;
  auto out = destab_record(canonical_lambda(rec.lambda, profile, &size), profile);
  out.orbit_size = size;
  return out;
}

std::vector<DestabRecord> maximal_destab_sets(const std::vector<OneParamSubgroup>& candidates,
                                              const DegreeProfile& profile, unsigned jobs, MaximalityKey key) {
  if (candidates.empty()) throw std::invalid_argument("no candidate one-parameter subgroups");
  std::vector<std::optional<DestabRecord>> slots(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t i) { slots[i] = destab_record(candidates[i], profile); });
  std::vector<DestabRecord> records;
  records.reserve(slots.size());
  for (auto& s : slots) records.push_back(std::move(*s));
  const auto set_of = [key](const DestabRecord& r) -> const std::vector<Monomial>& {
    return key == MaximalityKey::NOplus ? r.n_oplus : r.n_plus;
  };

  std::vector<char> maximal(records.size(), 1);
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    const auto& mine = set_of(records[i]);
    for (std::size_t j = 0; j < records.size(); ++j) {
      const auto& other = set_of(records[j]);
      if (other.size() > mine.size() && contains_all(other, mine)) {
        maximal[i] = 0;
        return;
      }
    }
  });

  std::set<OneParamSubgroup> seen;
  std::vector<DestabRecord> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!maximal[i]) continue;
    auto canon = symmetry_orbit(records[i], profile);
    if (seen.insert(canon.lambda).second) out.push_back(std::move(canon));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return out;
}

}  // namespace gitstab
