#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/destab.hpp"
#include "gitstab/lattice.hpp"
#include "gitstab/ops.hpp"
#include "gitstab/poly.hpp"
#include "gitstab/sing.hpp"

namespace gitstab {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternPoint {
  ChartPoint point;
  std::string expected;  // ADE label
  std::string tag;       // conic pair the point was taken from, if any
};

struct LocusFixture {
  Locus locus;
  int multiplicity = 0;
};

struct PolyFixture {
  std::string name;
  DegreeProfile profile;
  VariableNames names;
  MultiPoly poly{DegreeProfile{}};
  std::string note;
  std::optional<std::string> expected_class;
  std::map<std::string, std::vector<PatternPoint>> patterns;
  std::map<std::string, LocusFixture> loci;
  std::map<std::string, std::string> conic_slots;  // conic name -> x*y monomial it multiplies
};

struct LambdaFixture {
  std::string name;
  OneParamSubgroup lambda;
  std::string noplus_class;
};

struct ConicPair {
  std::string first;
  std::string second;
  std::string third;
  std::vector<std::vector<Rational>> points;
};

class FixtureSet {
 public:
  /// Reads manifest.json below root.
  static FixtureSet load(const std::filesystem::path& root);
  /// GITSTAB_FIXTURES if set, else the directory shipped with the sources.
  static std::filesystem::path default_root();
  static FixtureSet load_default() { return load(default_root()); }

  const std::filesystem::path& root() const { return root_; }

  std::vector<LambdaFixture> lambdas(const DegreeProfile& profile) const;
  std::optional<std::int64_t> published_candidate_count(const DegreeProfile& profile) const;

  std::vector<std::string> polynomial_names() const;
  const PolyFixture& polynomial(const std::string& name) const;

  IntegralLattice lattice(const std::string& name) const;
  LatticeVector polarization(const std::string& name) const;

  const SparsePoly& conic(const std::string& name) const;
  std::vector<ConicPair> conic_pairs() const;
  const ConicPair& conic_pair(const std::string& key) const;  // "f2,g2"

  /// "Noplus:lambda4", "N0:lambda4" or "Nplus:lambda4" for the profile's lambdas.
  std::vector<Monomial> named_support(const std::string& name, const DegreeProfile& profile) const;

 private:
  std::filesystem::path root_;
  std::map<std::string, std::vector<LambdaFixture>> lambdas_;
  std::map<std::string, std::int64_t> published_;
  std::map<std::string, PolyFixture> polys_;
  std::map<std::string, std::pair<IntegralLattice, LatticeVector>> lattices_;
  std::map<std::string, SparsePoly> conics_;
  std::map<std::string, ConicPair> pairs_;
};

}  // namespace gitstab
