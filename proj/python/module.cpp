// Python bindings. Reports come back as JSON text; a few typed helpers too.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gitstab/report.hpp"

namespace py = pybind11;
using namespace gitstab;

namespace {

const FixtureSet& fixtures() {
  static const FixtureSet fx = FixtureSet::load_default();
  return fx;
}

std::vector<std::vector<std::vector<std::int64_t>>> candidates(const std::string& profile, unsigned jobs) {
  std::vector<std::vector<std::vector<std::int64_t>>> out;
  for (const auto& c : enumerate_candidates(DegreeProfile::parse(profile), jobs)) out.push_back(c.per_factor());
  return out;
}

std::string classify_poly(const std::string& text, const std::string& profile, unsigned jobs) {
  ClassifyRequest req{DegreeProfile::parse(profile), {}, std::nullopt, {}, "input", std::nullopt};
  req.names = VariableNames::defaults(req.profile);
  req.poly = parse_poly(text, req.profile, req.names);
  return classify_report(req, &fixtures(), jobs).dump();
}

std::string classify_fixture(const std::string& name, unsigned jobs) {
  const auto& fx = fixtures();
  ClassifyRequest req{DegreeProfile::parse("p1:1,p1:1,p2:2"), {}, std::nullopt, {}, name, std::nullopt};
  if (name.find(':') != std::string::npos) {
    req.names = VariableNames::defaults(req.profile);
    req.support = fx.named_support(name, req.profile);
  } else {
    const auto& pf = fx.polynomial(name);
    req.profile = pf.profile;
    req.names = pf.names;
    req.poly = pf.poly;
    req.expected = pf.expected_class;
  }
  return classify_report(req, &fx, jobs).dump();
}

std::string sing_fixture(const std::string& name, const std::string& pattern, int truncation, unsigned jobs) {
  SingRequest req;
  req.fixture = &fixtures().polynomial(name);
  req.names = req.fixture->names;
  req.pattern = pattern;
  req.truncation = truncation;
  return sing_report(req, &fixtures(), jobs).dump();
}

std::string analyze(const std::string& text, const std::string& profile, const std::string& point, int truncation) {
  const auto p = DegreeProfile::parse(profile);
  const auto f = parse_poly(text, p);
  return analyze_point(f, parse_point(point, p), truncation).label;
}

py::object milnor(const std::string& text, const std::vector<std::string>& variables, int truncation) {
  const auto r = milnor_number(parse_affine(text, VariableNames(variables)), truncation);
  if (r.status != MilnorResult::Status::Finite) return py::none();
  return py::int_(r.value);
}

}  // namespace

PYBIND11_MODULE(_gitstab, m) {
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegreeMismatchError>(m, "DegreeMismatchError", PyExc_ValueError);
  py::register_exception<ProfileError>(m, "ProfileError", PyExc_ValueError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_RuntimeError);

  m.def("monomial_count", [](const std::string& profile) { return enumerate_monomials(DegreeProfile::parse(profile)).size(); });
  m.def("candidates", &candidates, py::arg("profile"), py::arg("jobs") = 1);
  m.def("signature", [](const std::vector<std::vector<std::int64_t>>& gram) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gram.size(); ++i) names.push_back("e" + std::to_string(i));
    const auto s = signature(IntegralLattice(names, gram));
    return std::make_tuple(s.positive, s.negative, s.zero);
  });
  m.def("milnor_number", &milnor, py::arg("poly"), py::arg("variables"), py::arg("truncation") = 10,
        "None when the truncated local algebra has not stabilized");
  m.def("singularity_label", &analyze, py::arg("poly"), py::arg("profile"), py::arg("point"), py::arg("truncation") = 8);

  m.def("ops_report", [](const std::string& profile, unsigned jobs) {
    return ops_report(DegreeProfile::parse(profile), &fixtures(), jobs).dump();
  }, py::arg("profile") = "p1:1,p1:1,p2:2", py::arg("jobs") = 1);
  m.def("classify_report", &classify_poly, py::arg("poly"), py::arg("profile") = "p1:1,p1:1,p2:2", py::arg("jobs") = 1);
  m.def("classify_fixture_report", &classify_fixture, py::arg("name"), py::arg("jobs") = 1);
  m.def("sing_report", &sing_fixture, py::arg("fixture"), py::arg("pattern") = "", py::arg("truncation") = 8,
        py::arg("jobs") = 1);
  m.def("lattice_report", [](const std::string& action, unsigned jobs) {
    LatticeRequest req;
    req.action = action;
    return lattice_report(req, jobs).dump();
  }, py::arg("action") = "all", py::arg("jobs") = 1);
  m.def("ledger_report", [] { return ledger_report().dump(); });
}
