#include "gitstab/poly.hpp"

#include <algorithm>
#include <cctype>

namespace gitstab {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::vector<Monomial> MultiPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  require_profile(m, profile_);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (!(other.profile_ == profile_)) throw ProfileError("profile mismatch in polynomial sum");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (!(other.profile_ == profile_)) throw ProfileError("profile mismatch in polynomial difference");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly MultiPoly::to_sparse() const {
  SparsePoly p(profile_.variable_count());
  for (const auto& [m, c] : terms_) p.add_term(m.exponents, c);
  return p;
}

namespace {

struct ParsedTerm {
  std::vector<int> exponents;
  Rational coefficient;
  bool constant = false;
};

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  std::vector<ParsedTerm> run() {
    std::vector<ParsedTerm> result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result.push_back(term(sign));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_, message); }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  ParsedTerm term(int sign) {
    ParsedTerm t{std::vector<int>(names_.size(), 0), Rational(sign), false};
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_ws();
      if (peek() == '/') {
        advance();
        skip_ws();
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      Integer d(den);
      if (d == 0) fail("zero denominator");
      t.coefficient *= Rational(Integer(num), d);
      t.coefficient.canonicalize();
      has_coeff = true;
      skip_ws();
      if (peek() != '*') {
        t.constant = true;
        return t;
      }
      advance();
      skip_ws();
    }
    while (true) {
      skip_ws();
      const std::size_t start_col = column_;
      if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
        fail(has_coeff ? "expected variable after '*'" : "expected coefficient or variable");
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      const std::size_t index = names_.index_of(name);
      if (index >= names_.size())
        throw UnknownVariableError(std::to_string(line_) + ":" + std::to_string(start_col) +
                                   ": unknown variable '" + name + "'");
      skip_ws();
      int power = 1;
      if (peek() == '^') {
        advance();
        skip_ws();
        std::string p = digits();
        if (p.empty()) fail("expected exponent after '^'");
        if (p.size() > 6) fail("exponent too large");
        power = std::stoi(p);
      }
      t.exponents[index] += power;
      skip_ws();
      if (peek() != '*') break;
      advance();
    }
    return t;
  }

  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const DegreeProfile& profile, const VariableNames& names) {
  if (names.size() != profile.variable_count()) throw ProfileError("variable names do not match profile");
  MultiPoly result(profile);
  for (auto& t : Parser(text, names).run()) {
    Monomial m{std::move(t.exponents)};
    if (t.constant && t.coefficient == 0) continue;
    if (!satisfies_profile(m, profile)) {
      if (t.constant) throw DegreeMismatchError("constant term does not match profile degrees");
      throw DegreeMismatchError("monomial " + monomial_to_string(m, names) + " does not have degree " + profile.spec());
    }
    result.add_term(m, t.coefficient);
  }
  return result;
}

MultiPoly parse_poly(std::string_view text, const DegreeProfile& profile) {
  return parse_poly(text, profile, VariableNames::defaults(profile));
}

SparsePoly parse_affine(std::string_view text, const VariableNames& names) {
  SparsePoly result(names.size());
  for (auto& t : Parser(text, names).run()) result.add_term(t.exponents, t.coefficient);
  return result;
}

std::string monomial_to_string(const Monomial& m, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& f, const VariableNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-c) : c;
    const bool is_constant = std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e == 0; });
    if (magnitude != 1 || is_constant) {
      out += gitstab::to_string(magnitude);
      if (!is_constant) out += '*';
    }
    if (!is_constant) out += monomial_to_string(m, names);
    first = false;
  }
  return out;
}

std::string to_string(const MultiPoly& f) { return to_string(f, VariableNames::defaults(f.profile())); }

void Chart::validate(const DegreeProfile& profile) const {
  if (pivots.size() != profile.factor_count()) throw std::invalid_argument("chart needs one pivot per factor");
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] >= profile.factor(i).size()) throw std::invalid_argument("chart pivot out of range");
}

std::vector<std::size_t> Chart::local_variables(const DegreeProfile& profile) const {
  validate(profile);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.factor_count(); ++i)
    for (std::size_t j = 0; j < profile.factor(i).size(); ++j)
      if (j != pivots[i]) out.push_back(profile.offset(i) + j);
  return out;
}

ValueAndGradient evaluate_gradient(const MultiPoly& f, const Chart& chart, const std::vector<Rational>& point) {
  const auto& profile = f.profile();
  const auto local = chart.local_variables(profile);
  if (point.size() != local.size())
    throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, chart needs " +
                                std::to_string(local.size()));
  std::vector<Rational> full(profile.variable_count(), 1);
  for (std::size_t k = 0; k < local.size(); ++k) full[local[k]] = point[k];

  ValueAndGradient out{0, std::vector<Rational>(local.size(), 0)};
  for (const auto& [m, c] : f.terms()) {
    Rational value = c;
    for (std::size_t v = 0; v < full.size(); ++v)
      for (int e = 0; e < m.exponents[v]; ++e) value *= full[v];
    out.value += value;
    for (std::size_t k = 0; k < local.size(); ++k) {
      const std::size_t v = local[k];
      const int e = m.exponents[v];
      if (e == 0) continue;
      Rational d = c * e;
      for (std::size_t w = 0; w < full.size(); ++w) {
        const int power = w == v ? e - 1 : m.exponents[w];
        for (int r = 0; r < power; ++r) d *= full[w];
      }
      out.gradient[k] += d;
    }
  }
  return out;
}

}  // namespace gitstab
