#include "gitstab/simplex.hpp"

#include <stdexcept>

namespace gitstab {

void LinearProgram::add_constraint(std::vector<Rational> row, Relation rel, Rational rhs) {
  if (row.size() != c.size()) throw std::invalid_argument("constraint width differs from objective");
  A.push_back(std::move(row));
  relations.push_back(rel);
  b.push_back(std::move(rhs));
}

namespace {

class Tableau {
 public:
  // rows: m constraint rows, each of width cols + 1 (last entry is rhs)
  std::vector<std::vector<Rational>> t;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = t[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr)
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      auto& row = t[i];
      for (std::size_t j = 0; j <= cols; ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    }
    basis[r] = c;
  }

  // Minimizes cost over columns allowed[j]; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    while (true) {
      // reduced costs: cost_j - sum_i cost_{basis_i} t_ij
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i][j] != 0 && cost[basis[i]] != 0) rc -= cost[basis[i]] * t[i][j];
        if (rc < 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables();
  const std::size_t m = lp.A.size();
  if (lp.relations.size() != m || lp.b.size() != m) throw std::invalid_argument("malformed linear program");

  std::size_t slacks = 0;
  for (auto r : lp.relations)
    if (r != Relation::Equal) ++slacks;
  const std::size_t art0 = n + slacks;
  Tableau tab;
  tab.cols = art0 + m;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1));
  tab.basis.resize(m);
  std::size_t s = n;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = tab.t[i];
    if (lp.A[i].size() != n) throw std::invalid_argument("constraint width differs from objective");
    for (std::size_t j = 0; j < n; ++j) row[j] = lp.A[i][j];
    if (lp.relations[i] == Relation::LessEqual) row[s++] = 1;
    else if (lp.relations[i] == Relation::GreaterEqual) row[s++] = -1;
    row[tab.cols] = lp.b[i];
    if (row[tab.cols] < 0)
      for (auto& v : row) v = -v;
    row[art0 + i] = 1;
    tab.basis[i] = art0 + i;
  }

  // phase 1
  std::vector<Rational> cost1(tab.cols, 0);
  for (std::size_t i = 0; i < m; ++i) cost1[art0 + i] = 1;
  std::vector<char> all(tab.cols, 1);
  tab.optimize(cost1, all);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= art0) infeas += tab.t[i][tab.cols];
  if (infeas > 0) return {LpStatus::Infeasible, 0, {}};

  // drive artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < art0 && tab.t[i][j] == 0) ++j;
    if (j < art0) {
      tab.pivot(i, j);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // phase 2
  std::vector<Rational> cost2(tab.cols, 0);
  for (std::size_t j = 0; j < n; ++j) cost2[j] = lp.c[j];
  std::vector<char> allowed(tab.cols, 1);
  for (std::size_t j = art0; j < tab.cols; ++j) allowed[j] = 0;
  if (!tab.optimize(cost2, allowed)) return {LpStatus::Unbounded, 0, {}};

  LpResult res{LpStatus::Optimal, 0, std::vector<Rational>(n, 0)};
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.cols];
  for (std::size_t j = 0; j < n; ++j) res.value += lp.c[j] * res.x[j];
  return res;
}

}  // namespace gitstab
