#include "gitstab/fixtures.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef GITSTAB_FIXTURES_DIR
#define GITSTAB_FIXTURES_DIR "fixtures"
#endif

namespace gitstab {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FixtureError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> parse_block(std::string text) {
  // "[a:b:c]"
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw FixtureError("malformed coordinates " + text);
  std::vector<Rational> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string part;
  while (std::getline(ss, part, ':')) out.push_back(parse_rational(part));
  return out;
}

// missing key reads as an empty object; returns a reference so range-for is safe
const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  const auto it = j.find(key);
  return it == j.end() ? empty : *it;
}

OneParamSubgroup lambda_from_json(const json& j) {
  std::vector<OneParamSubgroup::Weights> w;
  for (const auto& f : j) w.push_back(f.get<OneParamSubgroup::Weights>());
  return OneParamSubgroup::from_factors(w);
}

}  // namespace

std::filesystem::path FixtureSet::default_root() {
  if (const char* env = std::getenv("GITSTAB_FIXTURES"); env && *env) return env;
  return GITSTAB_FIXTURES_DIR;
}

FixtureSet FixtureSet::load(const std::filesystem::path& root) {
  FixtureSet fs;
  fs.root_ = root;
  json m;
  try {
    m = json::parse(read_file(root / "manifest.json"));
  } catch (const json::exception& e) {
    throw FixtureError(std::string("bad fixture manifest: ") + e.what());
  }
  try {
    for (const auto& [spec, entry] : section(m, "profiles").items()) {
      const auto profile = DegreeProfile::parse(spec);
      const auto key = profile.spec();
      if (entry.contains("published_candidate_count"))
        fs.published_[key] = entry["published_candidate_count"].get<std::int64_t>();
      for (const auto& [name, lam] : section(entry, "lambdas").items()) {
        auto l = lambda_from_json(lam.at("weights"));
        if (!l.matches(profile)) throw FixtureError("lambda " + name + " does not match " + key);
        fs.lambdas_[key].push_back({name, std::move(l), lam.value("noplus", "")});
      }
    }
    for (const auto& [name, lat] : section(m, "lattices").items()) {
      IntegralLattice L(lat.at("basis").get<std::vector<std::string>>(),
                        lat.at("gram").get<std::vector<std::vector<std::int64_t>>>());
      LatticeVector pol = lat.value("polarization", LatticeVector(L.rank(), 1));
      fs.lattices_.emplace(name, std::make_pair(std::move(L), std::move(pol)));
    }
    if (m.contains("conics")) {
      const auto& c = m["conics"];
      const VariableNames names(c.at("variables").get<std::vector<std::string>>());
      for (const auto& [name, text] : c.at("equations").items())
        fs.conics_.emplace(name, parse_affine(text.get<std::string>(), names));
      for (const auto& [key, pair] : section(c, "intersections").items()) {
        ConicPair cp;
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw FixtureError("conic pair key " + key);
        cp.first = key.substr(0, comma);
        cp.second = key.substr(comma + 1);
        cp.third = pair.value("third", "");
        for (const auto& p : pair.at("points")) cp.points.push_back(parse_block(p.get<std::string>()));
        fs.pairs_.emplace(key, std::move(cp));
      }
    }
    for (const auto& [name, entry] : section(m, "polynomials").items()) {
      PolyFixture pf;
      pf.name = name;
      pf.profile = DegreeProfile::parse(entry.at("profile").get<std::string>());
      pf.names = entry.contains("variables") ? VariableNames(entry["variables"].get<std::vector<std::string>>())
                                             : VariableNames::defaults(pf.profile);
      pf.poly = parse_poly(read_file(root / entry.at("file").get<std::string>()), pf.profile, pf.names);
      pf.note = entry.value("note", "");
      if (entry.contains("classify")) pf.expected_class = entry["classify"].get<std::string>();
      pf.conic_slots = entry.value("conics", std::map<std::string, std::string>{});
      for (const auto& [pname, pts] : section(entry, "patterns").items()) {
        std::vector<PatternPoint> out;
        for (const auto& p : pts) {
          const auto expect = p.value("expect", "");
          if (p.contains("point")) {
            out.push_back({parse_point(p["point"].get<std::string>(), pf.profile), expect, ""});
            continue;
          }
          auto blocks = p.at("blocks").get<std::string>();
          const auto key = p.at("conics").get<std::string>();
          const auto it = fs.pairs_.find(key);
          if (it == fs.pairs_.end()) throw FixtureError("unknown conic pair " + key);
          blocks.pop_back();  // drop the closing bracket
          for (const auto& z : it->second.points) {
            std::string text = blocks + ",[";
            for (std::size_t i = 0; i < z.size(); ++i) text += (i ? ":" : "") + to_string(z[i]);
            text += "]]";
            out.push_back({parse_point(text, pf.profile), expect, key});
          }
        }
        pf.patterns.emplace(pname, std::move(out));
      }
      for (const auto& [lname, loc] : section(entry, "loci").items()) {
        LocusFixture lf;
        lf.locus.chart.pivots = loc.at("chart").get<std::vector<std::size_t>>();
        lf.locus.chart.validate(pf.profile);
        const VariableNames params(loc.at("parameters").get<std::vector<std::string>>());
        lf.locus.parameters = params.size();
        for (const auto& c : loc.at("coordinates")) lf.locus.coordinates.push_back(parse_affine(c.get<std::string>(), params));
        if (lf.locus.coordinates.size() != pf.profile.variable_count())
          throw FixtureError("locus " + lname + " has the wrong number of coordinates");
        lf.multiplicity = loc.value("multiplicity", 0);
        pf.loci.emplace(lname, std::move(lf));
      }
      fs.polys_.emplace(name, std::move(pf));
    }
  } catch (const json::exception& e) {
    throw FixtureError(std::string("bad fixture manifest: ") + e.what());
  }
  return fs;
}

std::vector<LambdaFixture> FixtureSet::lambdas(const DegreeProfile& profile) const {
  const auto it = lambdas_.find(profile.spec());
  return it == lambdas_.end() ? std::vector<LambdaFixture>{} : it->second;
}

std::optional<std::int64_t> FixtureSet::published_candidate_count(const DegreeProfile& profile) const {
  const auto it = published_.find(profile.spec());
  if (it == published_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FixtureSet::polynomial_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : polys_) out.push_back(k);
  return out;
}

const PolyFixture& FixtureSet::polynomial(const std::string& name) const {
  const auto it = polys_.find(name);
  if (it == polys_.end()) throw FixtureError("unknown fixture " + name);
  return it->second;
}

IntegralLattice FixtureSet::lattice(const std::string& name) const {
  const auto it = lattices_.find(name);
  if (it == lattices_.end()) throw FixtureError("unknown lattice " + name);
  return it->second.first;
}

LatticeVector FixtureSet::polarization(const std::string& name) const {
  const auto it = lattices_.find(name);
  if (it == lattices_.end()) throw FixtureError("unknown lattice " + name);
  return it->second.second;
}

const SparsePoly& FixtureSet::conic(const std::string& name) const {
  const auto it = conics_.find(name);
  if (it == conics_.end()) throw FixtureError("unknown conic " + name);
  return it->second;
}

std::vector<ConicPair> FixtureSet::conic_pairs() const {
  std::vector<ConicPair> out;
  for (const auto& [k, v] : pairs_) out.push_back(v);
  return out;
}

const ConicPair& FixtureSet::conic_pair(const std::string& key) const {
  const auto it = pairs_.find(key);
  if (it == pairs_.end()) throw FixtureError("unknown conic pair " + key);
  return it->second;
}

std::vector<Monomial> FixtureSet::named_support(const std::string& name, const DegreeProfile& profile) const {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw FixtureError("family names look like Noplus:lambda4, got " + name);
  const auto kind = name.substr(0, colon);
  const auto lname = name.substr(colon + 1);
  for (const auto& l : lambdas(profile)) {
    if (l.name != lname) continue;
    const auto rec = destab_record(l.lambda, profile);
    if (kind == "Noplus") return rec.n_oplus;
    if (kind == "N0") return rec.n_zero;
    if (kind == "Nplus") return rec.n_plus;
    throw FixtureError("unknown family kind " + kind);
  }
  throw FixtureError("no subgroup named " + lname + " for profile " + profile.spec());
}

}  // namespace gitstab
