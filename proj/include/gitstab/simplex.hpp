#pragma once

#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// minimize c.x  subject to  A x (rel) b,  x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Relation> relations;
  std::vector<Rational> b;
  std::vector<Rational> c;

  std::size_t variables() const { return c.size(); }
  void add_constraint(std::vector<Rational> row, Relation rel, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense tableau simplex, exact, Bland's rule throughout.
LpResult solve(const LinearProgram& lp);

}  // namespace gitstab
