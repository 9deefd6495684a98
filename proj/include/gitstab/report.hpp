#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gitstab/classify.hpp"
#include "gitstab/fixtures.hpp"
#include "gitstab/ledger.hpp"
#include "gitstab/lattice.hpp"
#include "gitstab/sing.hpp"

namespace gitstab {

inline constexpr int kSchemaVersion = 1;

/// A JSON document plus whether every check recorded in it passed.
struct Report {
  nlohmann::json doc;
  bool passed = true;

  void check(const std::string& name, bool ok, nlohmann::json detail = nullptr);
  std::string dump() const;  // two-space indent, trailing newline
};

nlohmann::json to_json(const OneParamSubgroup& lambda);
nlohmann::json to_json(const std::vector<Monomial>& ms, const VariableNames& names);
nlohmann::json to_json(const SingularityReport& r, const DegreeProfile& profile);
nlohmann::json to_json(const LedgerEntry& e);

Report monomials_report(const DegreeProfile& profile, const VariableNames& names);

/// Candidates, maximal classes and their verdicts; fixture subgroups (if
/// any for this profile) are matched against the classes.
Report ops_report(const DegreeProfile& profile, const FixtureSet* fixtures, unsigned jobs);

struct ClassifyRequest {
  DegreeProfile profile;
  VariableNames names;
  std::optional<MultiPoly> poly;
  std::vector<Monomial> support;  // used when poly is empty
  std::string label;
  std::optional<std::string> expected;
};
Report classify_report(const ClassifyRequest& req, const FixtureSet* fixtures, unsigned jobs);

struct SingRequest {
  const PolyFixture* fixture = nullptr;        // or poly + points
  std::optional<MultiPoly> poly;
  VariableNames names;
  std::vector<PatternPoint> points;
  std::string pattern;                          // fixture pattern name; empty = all
  int truncation = 8;
};
Report sing_report(const SingRequest& req, const FixtureSet* fixtures, unsigned jobs);

struct LatticeRequest {
  std::string action = "all";  // signature, qform, isotropic, unigonal, degeneration, all
  std::string name = "Lambda0";
  IntegralLattice lattice = IntegralLattice::lambda0();
  LatticeVector polarization{1, 1, 1};
  std::int64_t target = 1;
  std::int64_t bound = 50;
  std::int64_t range_lo = -1000;
  std::int64_t range_hi = 1000;
  std::optional<LatticeVector> vector;
};
Report lattice_report(const LatticeRequest& req, unsigned jobs);

Report ledger_report();

}  // namespace gitstab
