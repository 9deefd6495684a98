// gitstab command-line tool. Every subcommand prints one JSON document.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gitstab/report.hpp"

namespace fs = std::filesystem;
using namespace gitstab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kDefaultProfile = "p1:1,p1:1,p2:2";

struct Options {
  std::string profile = kDefaultProfile;
  std::string input;
  std::string fixture;
  std::string out;
  std::string pattern;
  std::string expect;
  std::string action = "all";
  std::vector<std::string> points;
  std::vector<std::int64_t> range;
  std::vector<std::int64_t> vector;
  std::int64_t bound = 50;
  std::int64_t target = 1;
  int truncation = 8;
  unsigned jobs = 1;
};

// --input is a file path if one exists, "-" for stdin, else the polynomial itself
std::string read_input(const std::string& input) {
  if (input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return input;
}

void emit(const Report& r, const std::string& out) {
  const auto text = r.dump();
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + out);
  f << text;
}

Report run_classify(const Options& o, const FixtureSet& fx) {
  ClassifyRequest req{DegreeProfile::parse(o.profile), {}, std::nullopt, {}, "input", std::nullopt};
  if (!o.fixture.empty() && !o.input.empty()) throw std::invalid_argument("give either --input or --fixture");
  if (!o.fixture.empty()) {
    if (o.fixture.find(':') != std::string::npos) {
      req.support = fx.named_support(o.fixture, req.profile);
      req.names = VariableNames::defaults(req.profile);
      req.label = o.fixture;
    } else {
      const auto& pf = fx.polynomial(o.fixture);
      req.profile = pf.profile;
      req.names = pf.names;
      req.poly = pf.poly;
      req.label = pf.name;
      req.expected = pf.expected_class;
    }
  } else if (!o.input.empty()) {
    req.names = VariableNames::defaults(req.profile);
    req.poly = parse_poly(read_input(o.input), req.profile, req.names);
  } else {
    throw std::invalid_argument("classify needs --input or --fixture");
  }
  if (!o.expect.empty()) req.expected = o.expect;
  return classify_report(req, &fx, o.jobs);
}

Report run_sing(const Options& o, const FixtureSet& fx) {
  SingRequest req;
  req.truncation = o.truncation;
  req.pattern = o.pattern;
  DegreeProfile profile = DegreeProfile::parse(o.profile);
  if (!o.fixture.empty()) {
    req.fixture = &fx.polynomial(o.fixture);
    profile = req.fixture->profile;
  } else if (!o.input.empty()) {
    req.names = VariableNames::defaults(profile);
    req.poly = parse_poly(read_input(o.input), profile, req.names);
    if (o.points.empty()) throw std::invalid_argument("sing --input needs at least one --point");
  } else {
    throw std::invalid_argument("sing needs --input or --fixture");
  }
  for (const auto& p : o.points) req.points.push_back({parse_point(p, profile), o.expect, ""});
  return sing_report(req, &fx, o.jobs);
}

Report run_lattice(const Options& o, const FixtureSet& fx) {
  LatticeRequest req;
  req.action = o.action;
  if (!o.fixture.empty()) {
    req.name = o.fixture;
    req.lattice = fx.lattice(o.fixture);
    req.polarization = fx.polarization(o.fixture);
  }
  req.target = o.target;
  req.bound = o.bound;
  if (!o.range.empty()) {
    req.range_lo = o.range.at(0);
    req.range_hi = o.range.at(1);
  }
  if (!o.vector.empty()) req.vector = o.vector;
  return lattice_report(req, o.jobs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT stability of multidegree hypersurfaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile, "degree profile, e.g. p1:1,p1:1,p2:2")->capture_default_str();
  };

  auto* ops = app.add_subcommand("ops", "enumerate candidate subgroups and maximal destabilizing sets");
  add_profile(ops);
  add_common(ops);

  auto* classify = app.add_subcommand("classify", "classify a polynomial or a named family");
  add_profile(classify);
  add_common(classify);
  classify->add_option("--input", o.input, "polynomial text, a file holding it, or - for stdin");
  classify->add_option("--fixture", o.fixture, "fixture polynomial or family such as Noplus:lambda4");
  classify->add_option("--expect", o.expect, "expected class; mismatch exits 1");

  auto* sing = app.add_subcommand("sing", "singularity analysis at points");
  add_profile(sing);
  add_common(sing);
  sing->add_option("--input", o.input, "polynomial text, a file holding it, or - for stdin");
  sing->add_option("--fixture", o.fixture, "fixture polynomial");
  sing->add_option("--pattern", o.pattern, "fixture pattern or locus name");
  sing->add_option("--point", o.points, "point such as [[0:1],[1:0],[0:0:1]]; repeatable");
  sing->add_option("--expect", o.expect, "expected label for every --point");
  sing->add_option("--truncation", o.truncation, "jet order for the Milnor number")
      ->check(CLI::Range(4, 64))
      ->capture_default_str();

  auto* lattice = app.add_subcommand("lattice", "lattice arithmetic");
  add_common(lattice);
  lattice->add_option("action", o.action, "signature, qform, isotropic, unigonal, degeneration or all")
      ->check(CLI::IsMember({"signature", "qform", "isotropic", "unigonal", "degeneration", "all"}))
      ->capture_default_str();
  lattice->add_option("--fixture", o.fixture, "lattice name in the fixture manifest");
  lattice->add_option("--target", o.target, "required L.F for the isotropic search")->capture_default_str();
  lattice->add_option("--bound", o.bound, "coefficient bound for the isotropic search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lattice->add_option("--range", o.range, "lo hi for the unigonal certificate")->expected(2);
  lattice->add_option("--vector", o.vector, "vector for qform")->expected(1, -1);

  auto* ledger = app.add_subcommand("ledger", "intersection-number ledger");
  add_common(ledger);

  auto* monomials = app.add_subcommand("monomials", "list the monomial basis of a profile");
  add_profile(monomials);
  add_common(monomials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!o.range.empty() && o.range[0] > o.range[1]) throw std::invalid_argument("--range lo must not exceed hi");
    const auto fx = FixtureSet::load_default();
    std::optional<Report> r;
    if (*ops) {
      r = ops_report(DegreeProfile::parse(o.profile), &fx, o.jobs);
    } else if (*classify) {
      r = run_classify(o, fx);
    } else if (*sing) {
      r = run_sing(o, fx);
    } else if (*lattice) {
      r = run_lattice(o, fx);
    } else if (*ledger) {
      r = ledger_report();
    } else {
      const auto p = DegreeProfile::parse(o.profile);
      r = monomials_report(p, VariableNames::defaults(p));
    }
    emit(*r, o.out);
    return r->passed ? kExitPass : kExitCheckFailed;
  } catch (const std::exception& e) {
    // parse, profile and fixture errors all count as bad input
    std::cerr << "gitstab: " << e.what() << "\n";
    return kExitUsage;
  }
}
