#include "gitstab/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace gitstab {

Family make_family(std::vector<Monomial> support, DegreeProfile profile, std::string label) {
  if (support.empty()) throw std::invalid_argument("family " + label + " has empty support");
  for (const auto& m : support) require_profile(m, profile);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return Family{std::move(support), std::move(profile), std::move(label)};
}

Verdict classify_family(const Family& fam, const std::vector<DestabRecord>& records) {
  if (fam.support.empty()) throw std::invalid_argument("family " + fam.label + " has empty support");
  auto support = fam.support;
  std::sort(support.begin(), support.end());
  for (const auto& m : support) require_profile(m, fam.profile);

  Verdict v;
  for (std::size_t r = 0; r < records.size() && !v.containing_record; ++r) {
    if (!records[r].lambda.matches(fam.profile)) throw ProfileError("record does not match family profile");
    for (const auto& image : symmetry_images(records[r].lambda, fam.profile)) {
      const bool inside = std::all_of(support.begin(), support.end(), [&](const Monomial& m) { return pairing(image, m) >= 0; });
      if (inside) {
        v.containing_record = r;
        v.containing_image = image;
        break;
      }
    }
  }
  if (!v.containing_record) {
    v.cls = StabilityClass::Stable;
    return v;
  }
  auto tv = torus_verdict(support, fam.profile);
  if (tv.cls == StabilityClass::Stable)
    throw std::logic_error("centroid criterion disagrees with containment for " + fam.label);
  v.cls = tv.cls;
  v.witness = std::move(tv.witness);
  return v;
}

Verdict classify_divisor(const MultiPoly& f, const std::vector<DestabRecord>& records) {
  if (f.is_zero()) throw std::invalid_argument("cannot classify the zero polynomial");
  return classify_family(make_family(f.support(), f.profile(), "divisor"), records);
}

std::vector<Family> polystable_candidates(const std::vector<DestabRecord>& records, const DegreeProfile& profile) {
  std::vector<Family> out;
  for (const auto& rec : records) {
    if (rec.n_oplus.empty() || rec.n_zero.empty()) continue;
    if (torus_verdict(rec.n_oplus, profile).cls != StabilityClass::StrictlySemistable) continue;
    out.push_back(make_family(rec.n_zero, profile, "N0" + rec.lambda.to_string()));
  }
  return out;
}

}  // namespace gitstab
