#include "bqm/inference.hpp"

#include <algorithm>

namespace bqm {

namespace {

char axis_letter(int axis) {
  switch (axis) {
    case 1:
      return 'X';
    case 2:
      return 'Y';
    case 3:
      return 'Z';
    default:
      throw InvalidArgument("spin axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

void validate(const ConstraintSystem& s) {
  if (s.outcomes.empty()) throw InvalidArgument("constraint system has no outcomes");
  for (const auto& e : s.equations)
    if (e.coefficients.size() != s.outcomes.size())
      throw InvalidArgument("equation '" + e.name + "' has " + std::to_string(e.coefficients.size()) +
                            " coefficients for " + std::to_string(s.outcomes.size()) + " outcomes");
}

void split(const std::vector<LinearEquation>& rows, RationalMatrix& a, std::vector<Rational>& b) {
  for (const auto& r : rows) {
    a.push_back(r.coefficients);
    b.push_back(r.rhs);
  }
}

RationalMatrix augmented(const std::vector<LinearEquation>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) {
    auto row = r.coefficients;
    row.push_back(r.rhs);
    m.push_back(std::move(row));
  }
  return m;
}

FarkasCertificate make_certificate(const std::vector<LinearEquation>& rows, std::vector<Rational> y) {
  FarkasCertificate c;
  c.combined_coefficients.assign(rows.front().coefficients.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < c.combined_coefficients.size(); ++j)
      c.combined_coefficients[j] += y[r] * rows[r].coefficients[j];
    c.combined_rhs += y[r] * rows[r].rhs;
  }
  c.multipliers = std::move(y);
  return c;
}

}  // namespace

std::vector<LinearEquation> with_normalization(const ConstraintSystem& s) {
  auto rows = s.equations;
  rows.push_back({std::vector<Rational>(s.outcomes.size(), 1), 1, "normalization"});
  return rows;
}

bool verify_certificate(const ConstraintSystem& s, const FarkasCertificate& c) {
  validate(s);
  const auto rows = with_normalization(s);
  if (c.multipliers.size() != rows.size()) return false;
  RationalMatrix a;
  std::vector<Rational> b;
  split(rows, a, b);
  const auto again = make_certificate(rows, c.multipliers);
  return again.combined_coefficients == c.combined_coefficients && again.combined_rhs == c.combined_rhs &&
         is_farkas_certificate(a, b, c.multipliers);
}

std::string to_string(InferenceStatus s) {
  switch (s) {
    case InferenceStatus::unique:
      return "unique";
    case InferenceStatus::indeterminate:
      return "indeterminate";
    case InferenceStatus::infeasible:
      return "infeasible";
  }
  return "?";
}

InferenceResult infer_probabilities(const ConstraintSystem& s) {
  validate(s);
  const auto rows = with_normalization(s);
  RationalMatrix a;
  std::vector<Rational> b;
  split(rows, a, b);
  const std::size_t n = s.outcomes.size();

  InferenceResult res;
  auto m = augmented(rows);
  rref(m);
  for (const auto& row : m) {
    if (std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; })) continue;
    res.derived_identities.push_back({std::vector<Rational>(row.begin(), row.end() - 1), row.back(), ""});
  }

  const auto feas = solve_lp(a, b, {});
  if (feas.status == LPStatus::infeasible) {
    res.status = InferenceStatus::infeasible;
    res.certificate = make_certificate(rows, feas.farkas);
    return res;
  }

  bool all_pinned = true;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> c(n);
    c[k] = 1;
    const auto lo = solve_lp(a, b, c, Sense::minimize);
    const auto hi = solve_lp(a, b, c, Sense::maximize);
    if (lo.status != LPStatus::optimal || hi.status != LPStatus::optimal)
      throw InvariantViolation("probability bounds are not finite");
    res.ranges.emplace_back(lo.objective, hi.objective);
    if (lo.objective == hi.objective)
      res.pinned.push_back({k, lo.objective});
    else
      all_pinned = false;
  }
  res.directions = null_space(a);
  if (all_pinned) {
    res.status = InferenceStatus::unique;
    for (const auto& p : res.pinned) res.solution.push_back(p.value);
  } else {
    res.status = InferenceStatus::indeterminate;
    res.solution = feas.x;
  }
  return res;
}

bool implies(const ConstraintSystem& s, const LinearEquation& identity) {
  validate(s);
  if (identity.coefficients.size() != s.outcomes.size())
    throw InvalidArgument("identity has the wrong number of coefficients");
  auto m = augmented(with_normalization(s));
  const auto before = rank(m);
  auto row = identity.coefficients;
  row.push_back(identity.rhs);
  m.push_back(std::move(row));
  return rank(m) == before;
}

std::pair<Rational, Rational> functional_range(const ConstraintSystem& s, const std::vector<Rational>& c) {
  validate(s);
  if (c.size() != s.outcomes.size()) throw InvalidArgument("functional has the wrong number of coefficients");
  RationalMatrix a;
  std::vector<Rational> b;
  split(with_normalization(s), a, b);
  const auto lo = solve_lp(a, b, c, Sense::minimize);
  if (lo.status == LPStatus::infeasible) throw InvalidArgument("constraint system is infeasible");
  const auto hi = solve_lp(a, b, c, Sense::maximize);
  if (lo.status != LPStatus::optimal || hi.status != LPStatus::optimal)
    throw InvariantViolation("linear functional unbounded on probabilities");
  return {lo.objective, hi.objective};
}

ConstraintSystem single_spin_system(const Rational& expectation) {
  return {{"+1", "-1"}, {{{1, -1}, expectation, "E(A)"}}};
}

ConstraintSystem spin_product_system(const Rational& correlator, const std::optional<Rational>& side1,
                                     const std::optional<Rational>& side2) {
  ConstraintSystem s{{"++", "+-", "-+", "--"}, {{{1, -1, -1, 1}, correlator, "E(AB)"}}};
  if (side1) s.equations.push_back({{1, 1, -1, -1}, *side1, "E(A)"});
  if (side2) s.equations.push_back({{1, -1, 1, -1}, *side2, "E(B)"});
  return s;
}

ConstraintSystem spin_product_system(const TwoParticleState& s, int i, int j, bool marginals) {
  const auto corr = correlator(s, i, j);
  if (!marginals) return spin_product_system(corr);
  return spin_product_system(corr, single_spin(s, 1, i), single_spin(s, 2, j));
}

MomentReport moment_system(const std::vector<Rational>& outcome_values, std::size_t max_power) {
  if (outcome_values.empty()) throw InvalidArgument("no outcome values");
  RationalMatrix m;
  for (std::size_t k = 0; k <= max_power; ++k) {
    std::vector<Rational> row;
    for (const auto& v : outcome_values) {
      Rational p = 1;
      for (std::size_t e = 0; e < k; ++e) p *= v;
      row.push_back(p);
    }
    m.push_back(std::move(row));
  }
  MomentReport r;
  r.unknowns = outcome_values.size();
  r.max_power = max_power;
  r.rank = rank(m);
  r.indeterminacy = r.unknowns - r.rank;
  return r;
}

HVResult hv_feasibility(const std::vector<CorrelatorConstraint>& correlators,
                        const std::vector<SingleSpinConstraint>& single_spins, int axes_per_side) {
  HVResult r;
  if (axes_per_side == 2)
    r.axes = {1, 3};
  else if (axes_per_side == 3)
    r.axes = {1, 2, 3};
  else
    throw InvalidArgument("axes per side must be 2 or 3");
  const std::size_t k = r.axes.size();
  const auto slot = [&](int axis) {
    const auto it = std::find(r.axes.begin(), r.axes.end(), axis);
    if (it == r.axes.end()) throw InvalidArgument(std::string("axis ") + axis_letter(axis) + " is not in use");
    return static_cast<std::size_t>(it - r.axes.begin());
  };
  const auto in_range = [](const Rational& v) {
    if (v < -1 || v > 1) throw InvalidArgument("constraint value " + to_string(v) + " outside [-1, 1]");
  };

  const std::size_t configs = std::size_t{1} << (2 * k);
  for (std::size_t c = 0; c < configs; ++c) {
    std::vector<int> vals;
    std::string label = "(";
    for (std::size_t v = 0; v < 2 * k; ++v) {
      const int val = (c >> (2 * k - 1 - v)) & 1 ? -1 : 1;
      vals.push_back(val);
      if (v == k)
        label += ';';
      else if (v)
        label += ',';
      label += val > 0 ? '+' : '-';
    }
    r.configurations.push_back(label + ")");
    r.assignments.push_back(std::move(vals));
  }
  r.system.outcomes = r.configurations;
  for (const auto& cc : correlators) {
    in_range(cc.value);
    const auto s1 = slot(cc.axis1);
    const auto s2 = k + slot(cc.axis2);
    LinearEquation e{{}, cc.value, std::string("E(") + axis_letter(cc.axis1) + "1" + axis_letter(cc.axis2) + "2)"};
    for (const auto& a : r.assignments) e.coefficients.push_back(a[s1] * a[s2]);
    r.system.equations.push_back(std::move(e));
  }
  for (const auto& sc : single_spins) {
    in_range(sc.value);
    if (sc.side != 1 && sc.side != 2) throw InvalidArgument("side must be 1 or 2");
    const auto s = (sc.side == 2 ? k : 0) + slot(sc.axis);
    LinearEquation e{{}, sc.value, std::string("E(") + axis_letter(sc.axis) + std::to_string(sc.side) + ")"};
    for (const auto& a : r.assignments) e.coefficients.push_back(a[s]);
    r.system.equations.push_back(std::move(e));
  }

  const auto rows = with_normalization(r.system);
  RationalMatrix a;
  std::vector<Rational> b;
  split(rows, a, b);
  const auto lp = solve_lp(a, b, {});
  r.feasible = lp.status != LPStatus::infeasible;
  if (r.feasible)
    r.witness = lp.x;
  else
    r.certificate = make_certificate(rows, lp.farkas);
  return r;
}

std::vector<CorrelatorConstraint> correlator_constraints(const TwoParticleState& s, const std::vector<int>& axes) {
  std::vector<CorrelatorConstraint> out;
  for (int i : axes)
    for (int j : axes) out.push_back({i, j, correlator(s, i, j)});
  return out;
}

std::vector<SingleSpinConstraint> single_spin_constraints(const TwoParticleState& s, const std::vector<int>& axes) {
  std::vector<SingleSpinConstraint> out;
  for (int side : {1, 2})
    for (int a : axes) out.push_back({side, a, single_spin(s, side, a)});
  return out;
}

Rational witness_correlator(const HVResult& r, int axis1, int axis2) {
  const auto k = r.axes.size();
  const auto s1 = static_cast<std::size_t>(std::find(r.axes.begin(), r.axes.end(), axis1) - r.axes.begin());
  const auto s2 = k + static_cast<std::size_t>(std::find(r.axes.begin(), r.axes.end(), axis2) - r.axes.begin());
  if (s1 >= k || s2 >= 2 * k) throw InvalidArgument("axis not in use");
  Rational sum;
  for (std::size_t c = 0; c < r.witness.size(); ++c) sum += r.witness[c] * (r.assignments[c][s1] * r.assignments[c][s2]);
  return sum;
}

Rational witness_single_spin(const HVResult& r, int side, int axis) {
  const auto k = r.axes.size();
  const auto pos = static_cast<std::size_t>(std::find(r.axes.begin(), r.axes.end(), axis) - r.axes.begin());
  if (pos >= k || (side != 1 && side != 2)) throw InvalidArgument("axis not in use");
  const auto s = (side == 2 ? k : 0) + pos;
  Rational sum;
  for (std::size_t c = 0; c < r.witness.size(); ++c) sum += r.witness[c] * r.assignments[c][s];
  return sum;
}

std::vector<GaussianRational> canonical_state(const std::string& label) {
  if (label == "S") return {{0, 0}, {1, 0}, {-1, 0}, {0, 0}};
  if (label == "T") return {{1, 0}, {0, 0}, {1, 1}, {1, 0}};
  if (label == "U") return {{1, 0}, {0, 0}, {1, 0}, {1, 1}};
  throw InvalidArgument("unknown canonical state '" + label + "'");
}

namespace {

using ComplexMatrix = std::vector<std::vector<GaussianRational>>;

ComplexMatrix complex_pauli(int axis) {
  switch (axis) {
    case 1:
      return {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
    case 2:
      return {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}};
    case 3:
      return {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}};
    default:
      throw InvalidArgument("spin axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

}  // namespace

Rational canonical_correlator(const std::string& label, int i, int j) {
  const auto v = canonical_state(label);
  const auto a = complex_pauli(i);
  const auto b = complex_pauli(j);
  GaussianRational num, den;
  for (std::size_t r = 0; r < 4; ++r) {
    den = den + v[r].conj() * v[r];
    for (std::size_t c = 0; c < 4; ++c) num = num + v[r].conj() * a[r / 2][c / 2] * b[r % 2][c % 2] * v[c];
  }
  if (num.im != 0 || den.im != 0) throw InvariantViolation("canonical correlator has an imaginary part");
  return num.re / den.re;
}

CorrespondenceReport correspondence_check() {
  const FieldConfig cfg(3, 2);
  const PhiMap phi(cfg);
  CorrespondenceReport rep;
  rep.all_hold = true;
  for (const char* label : {"S", "T", "U"}) {
    const auto s = named_state(cfg, label);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const auto g = bracket(s.state.rep(), product_spin(cfg, i, j));
        const auto c = canonical_correlator(label, i, j);
        const Rational expected = std::string(label) == "S" ? phi(g) : Rational(-phi(g) / 2);
        const bool holds = c == expected;
        rep.all_hold = rep.all_hold && holds;
        rep.entries.push_back({label, i, j, g, c, holds});
      }
  }
  return rep;
}

std::vector<Table4Row> table4_report() {
  std::vector<Table4Row> out;
  const int signs[4] = {1, -1, -1, 1};
  for (const char* label : {"S", "T", "U"}) {
    const auto v = canonical_state(label);
    Rational total;
    for (const auto& a : v) total += (a.conj() * a).re;
    Table4Row row{label, {}, 0};
    for (std::size_t k = 0; k < 4; ++k) {
      row.probabilities.push_back((v[k].conj() * v[k]).re / total);
      row.expectation += signs[k] * row.probabilities.back();
    }
    if (row.expectation != canonical_correlator(label, 3, 3))
      throw InvariantViolation("Born probabilities disagree with the sigma3 sigma3 correlator");
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace bqm
