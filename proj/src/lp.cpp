#include "bqm/lp.hpp"

#include <optional>

namespace bqm {

namespace {

struct Tableau {
  std::size_t m;
  std::size_t cols;  // structural plus artificial columns
  RationalMatrix t;  // m rows of cols + 1 entries, rhs last
  std::vector<Rational> cost;  // reduced costs, cols + 1 entries, last is -objective
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][*enter] <= 0) continue;
        const Rational ratio = t[i][cols] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LPResult solve_lp(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c,
                  Sense sense) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidArgument("LP: row count mismatch");
  const std::size_t n = m ? a.front().size() : c.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("LP: ragged constraint matrix");
  if (!c.empty() && c.size() != n) throw InvalidArgument("LP: objective has wrong length");

  Tableau tab{m, n + m, RationalMatrix(m, std::vector<Rational>(n + m + 1)), std::vector<Rational>(n + m + 1),
              std::vector<std::size_t>(m)};
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign[i] * a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = sign[i] * b[i];
    tab.basis[i] = n + i;
  }
  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) tab.cost[n + i] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j) tab.cost[j] -= tab.t[i][j];
  tab.optimize(n + m);

  LPResult res;
  const Rational infeasibility = -tab.cost[n + m];
  if (infeasibility > 0) {
    res.status = LPStatus::infeasible;
    // Phase-1 duals are y_i = 1 - reduced cost of artificial i.
    for (std::size_t i = 0; i < m; ++i) res.farkas.push_back(-(1 - tab.cost[n + i]) * sign[i]);
    if (!is_farkas_certificate(a, b, res.farkas))
      throw InvariantViolation("phase 1 produced an invalid Farkas certificate");
    return res;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2.
  std::vector<Rational> cost(n);
  for (std::size_t j = 0; j < c.size(); ++j) cost[j] = sense == Sense::minimize ? c[j] : Rational(-c[j]);
  std::fill(tab.cost.begin(), tab.cost.end(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) tab.cost[j] = cost[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n || cost[tab.basis[i]] == 0) continue;
    const Rational f = cost[tab.basis[i]];
    for (std::size_t j = 0; j <= n + m; ++j) tab.cost[j] -= f * tab.t[i][j];
  }
  const bool bounded = tab.optimize(n);

  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][n + m];
  if (!bounded) {
    res.status = LPStatus::unbounded;
    return res;
  }
  res.status = LPStatus::optimal;
  for (std::size_t j = 0; j < c.size(); ++j) res.objective += c[j] * res.x[j];
  return res;
}

bool is_farkas_certificate(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  if (y.size() != a.size() || b.size() != a.size()) return false;
  Rational by;
  for (std::size_t i = 0; i < b.size(); ++i) by += b[i] * y[i];
  if (by >= 0) return false;
  const std::size_t n = a.empty() ? 0 : a.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i][j] * y[i];
    if (s < 0) return false;
  }
  return true;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational s = m[r][c];
    for (auto& v : m[r]) v /= s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix null_space(const RationalMatrix& a) {
  if (a.empty()) return {};
  auto m = a;
  const auto pivots = rref(m);
  const std::size_t n = a.front().size();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) {
  auto copy = m;
  return rref(copy).size();
}

}  // namespace bqm
