#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <set>

#include "bqm/inference.hpp"

using namespace bqm;

namespace {

using cd = std::complex<double>;

// Floating-point reference for <v| s_i (x) s_j |v> / <v|v>.
double float_correlator(const std::vector<cd>& v, int i, int j) {
  auto pauli = [](int a) -> std::array<std::array<cd, 2>, 2> {
    const cd I(0, 1);
    if (a == 1) return {{{0, 1}, {1, 0}}};
    if (a == 2) return {{{0, -I}, {I, 0}}};
    return {{{1, 0}, {0, -1}}};
  };
  const auto a = pauli(i), b = pauli(j);
  cd num = 0, den = 0;
  for (int r = 0; r < 4; ++r) {
    den += std::conj(v[r]) * v[r];
    for (int s = 0; s < 4; ++s) num += std::conj(v[r]) * a[r / 2][s / 2] * b[r % 2][s % 2] * v[s];
  }
  CHECK(std::abs((num / den).imag()) < 1e-12);
  return (num / den).real();
}

LinearEquation eq(std::vector<Rational> c, Rational rhs) { return {std::move(c), std::move(rhs), "identity"}; }

std::pair<Rational, Rational> point(const Rational& r) { return {r, r}; }

}  // namespace

TEST_CASE("single spin with zero expectation gives one half each") {
  const auto r = infer_probabilities(single_spin_system(0));
  REQUIRE(r.status == InferenceStatus::unique);
  CHECK(r.solution == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(r.directions.empty());
  const auto e = infer_probabilities(single_spin_system(-1));
  CHECK(e.solution == std::vector<Rational>{0, 1});
}

TEST_CASE("T and U over sigma3 x sigma3 leave the probabilities indeterminate") {
  const FieldConfig c(3, 2);
  const auto t = spin_product_system(named_state(c, "T"), 3, 3, false);
  const auto rt = infer_probabilities(t);
  REQUIRE(rt.status == InferenceStatus::indeterminate);
  CHECK(rt.directions.size() == 2);
  CHECK(implies(t, eq({1, 0, 0, 1}, Rational(1, 2))));
  CHECK(implies(t, eq({0, 1, 1, 0}, Rational(1, 2))));
  CHECK(!implies(t, eq({1, 0, 0, 0}, Rational(1, 4))));
  for (const auto& range : rt.ranges) CHECK(range == std::pair<Rational, Rational>{0, Rational(1, 2)});
  CHECK(rt.pinned.empty());

  const auto u = spin_product_system(named_state(c, "U"), 3, 3, false);
  const auto ru = infer_probabilities(u);
  REQUIRE(ru.status == InferenceStatus::indeterminate);
  CHECK(implies(u, eq({1, 0, 0, 1}, 0)));
  CHECK(implies(u, eq({0, 1, 1, 0}, 1)));
  CHECK(ru.ranges[0] == point(0));
  CHECK(ru.ranges[3] == point(0));
  CHECK(ru.ranges[1] == std::pair<Rational, Rational>{0, 1});
  std::set<std::size_t> pinned;
  for (const auto& pv : ru.pinned) {
    CHECK(pv.value == 0);
    pinned.insert(pv.outcome);
  }
  CHECK(pinned == std::set<std::size_t>{0, 3});
}

TEST_CASE("derived identities span the equations") {
  const auto s = spin_product_system(0);
  const auto r = infer_probabilities(s);
  CHECK(r.derived_identities.size() == 2);
  for (const auto& id : r.derived_identities) CHECK(implies(s, id));
  for (const auto& e : with_normalization(s)) CHECK(implies(s, e));
  CHECK(with_normalization(s).back().name == "normalization");
}

TEST_CASE("functional range covers consequences of nonnegativity") {
  const auto u = spin_product_system(-1);
  CHECK(functional_range(u, {1, 0, 0, 0}) == point(0));
  CHECK(functional_range(u, {0, 1, 0, 0}) == std::pair<Rational, Rational>{0, 1});
  CHECK(functional_range(u, {1, -1, -1, 1}) == point(-1));
  CHECK_THROWS_AS(functional_range(spin_product_system(Rational(1), Rational(-1), Rational(1)), {1, 0, 0, 0}),
                  InvalidArgument);
  CHECK_THROWS_AS(functional_range(u, {1, 0}), InvalidArgument);
}

TEST_CASE("the singlet with marginals is fully determined") {
  const auto s = spin_product_system(named_state(FieldConfig(3, 2), "S"), 3, 3, true);
  const auto r = infer_probabilities(s);
  REQUIRE(r.status == InferenceStatus::unique);
  CHECK(r.solution == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2), 0});
}

TEST_CASE("T on sigma1 x sigma1 with marginals is infeasible, with a certificate") {
  const FieldConfig c(3, 2);
  const auto t = named_state(c, "T");
  bool any_infeasible = false;
  for (int i : {1, 2, 3})
    for (int j : {1, 2, 3}) {
      const auto s = spin_product_system(t, i, j, true);
      const auto r = infer_probabilities(s);
      if (r.status != InferenceStatus::infeasible) continue;
      any_infeasible = true;
      REQUIRE(r.certificate);
      CHECK(verify_certificate(s, *r.certificate));
      CHECK(r.ranges.empty());
    }
  CHECK(any_infeasible);
  // E(AB) = 1 with E(A) = 1 and E(B) = -1 cannot be met.
  const auto bad = spin_product_system(Rational(1), Rational(1), Rational(-1));
  const auto r = infer_probabilities(bad);
  REQUIRE(r.status == InferenceStatus::infeasible);
  REQUIRE(r.certificate);
  CHECK(verify_certificate(bad, *r.certificate));
  auto forged = *r.certificate;
  forged.multipliers.assign(forged.multipliers.size(), 0);
  CHECK(!verify_certificate(bad, forged));
}

TEST_CASE("moment systems over +-1 outcomes are singular past the first power") {
  const auto one = moment_system({1, -1}, 4);
  CHECK(one.rank == 2);
  CHECK(one.unique());
  const auto two = moment_system({1, -1, -1, 1}, 6);
  CHECK(two.unknowns == 4);
  CHECK(two.rank == 2);
  CHECK(two.indeterminacy == 2);
  const auto three = moment_system({1, 2, 3}, 2);
  CHECK(three.unique());
}

TEST_CASE("the GF(3) singlet has a hidden-variable mimic") {
  const auto s = named_state(FieldConfig(3, 1), "S");
  const auto r = hv_feasibility(correlator_constraints(s, {1, 3}), {}, 2);
  REQUIRE(r.feasible);
  CHECK(r.configurations.size() == 16);
  CHECK(r.configurations.front() == "(+,+;+,+)");
  for (int i : {1, 3})
    for (int j : {1, 3}) CHECK(witness_correlator(r, i, j) == correlator(s, i, j));
  const std::set<std::string> allowed{"(+,+;-,-)", "(+,-;-,+)", "(-,+;+,-)", "(-,-;+,+)"};
  std::vector<Rational> first(r.configurations.size(), 0), second(r.configurations.size(), 0);
  for (std::size_t k = 0; k < r.configurations.size(); ++k) {
    if (!allowed.count(r.configurations[k])) CHECK(r.witness[k] == 0);
    if (r.configurations[k] == "(+,+;-,-)" || r.configurations[k] == "(-,-;+,+)") first[k] = 1;
    if (r.configurations[k] == "(+,-;-,+)" || r.configurations[k] == "(-,+;+,-)") second[k] = 1;
  }
  CHECK(functional_range(r.system, first) == point(Rational(1, 2)));
  CHECK(functional_range(r.system, second) == point(Rational(1, 2)));
}

TEST_CASE("T and U over GF(9) admit no hidden-variable mimic") {
  const FieldConfig c(3, 2);
  for (const char* label : {"T", "U"}) {
    const auto st = named_state(c, label);
    const auto r = hv_feasibility(correlator_constraints(st, {1, 3}), {}, 2);
    CAPTURE(label);
    CHECK(!r.feasible);
    REQUIRE(r.certificate);
    CHECK(verify_certificate(r.system, *r.certificate));
    const auto r3 = hv_feasibility(correlator_constraints(st, {1, 2, 3}), single_spin_constraints(st, {1, 2, 3}), 3);
    CHECK(!r3.feasible);
  }
  const auto s = named_state(c, "S");
  const auto rs = hv_feasibility(correlator_constraints(s, {1, 2, 3}), single_spin_constraints(s, {1, 2, 3}), 3);
  CHECK(rs.configurations.size() == 64);
  // Perfect anticorrelation on every axis with zero marginals: a mimic exists.
  REQUIRE(rs.feasible);
  for (int side : {1, 2})
      for (int a : {1, 2, 3}) CHECK(witness_single_spin(rs, side, a) == 0);
  CHECK_THROWS_AS(hv_feasibility({}, {}, 4), InvalidArgument);
}

TEST_CASE("canonical correlators agree with a floating-point oracle") {
  const cd I(0, 1);
  const std::vector<std::pair<std::string, std::vector<cd>>> states{
      {"S", {0, 1, -1, 0}}, {"T", {1, 0, 1.0 + I, 1}}, {"U", {1, 0, 1, 1.0 + I}}};
  for (const auto& [label, v] : states)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        CAPTURE(label);
        CHECK(canonical_correlator(label, i, j).convert_to<double>() == doctest::Approx(float_correlator(v, i, j)));
      }
  CHECK_THROWS_AS(canonical_correlator("V", 1, 1), InvalidArgument);
}

TEST_CASE("canonical correlators of S, T and U") {
  CHECK(canonical_correlator("S", 1, 1) == -1);
  CHECK(canonical_correlator("S", 3, 3) == -1);
  CHECK(canonical_correlator("S", 1, 3) == 0);
  CHECK(canonical_correlator("T", 1, 1) == Rational(1, 2));
  CHECK(canonical_correlator("T", 1, 3) == Rational(1, 2));
  CHECK(canonical_correlator("T", 3, 1) == Rational(-1, 2));
  CHECK(canonical_correlator("T", 3, 3) == 0);
  CHECK(canonical_correlator("U", 1, 1) == Rational(1, 2));
  CHECK(canonical_correlator("U", 3, 3) == Rational(1, 2));
  CHECK(canonical_correlator("U", 3, 1) == Rational(-1, 2));
}

TEST_CASE("canonical sigma3 x sigma3 probabilities") {
  const auto rows = table4_report();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].state == "S");
  CHECK(rows[0].probabilities == std::vector<Rational>{0, Rational(1, 2), Rational(1, 2), 0});
  CHECK(rows[0].expectation == -1);
  CHECK(rows[1].probabilities == std::vector<Rational>{Rational(1, 4), 0, Rational(1, 2), Rational(1, 4)});
  CHECK(rows[1].expectation == 0);
  CHECK(rows[2].probabilities == std::vector<Rational>{Rational(1, 4), 0, Rational(1, 4), Rational(1, 2)});
  CHECK(rows[2].expectation == Rational(1, 2));
  for (const auto& r : rows) {
    Rational total = 0, ev = 0;
    const int sign[4] = {1, -1, -1, 1};
    for (int k = 0; k < 4; ++k) {
      total += r.probabilities[k];
      ev += sign[k] * r.probabilities[k];
    }
    CHECK(total == 1);
    CHECK(ev == r.expectation);
  }
}

TEST_CASE("correspondence between Galois and canonical correlators") {
  const auto r = correspondence_check();
  CHECK(r.entries.size() == 27);
  CHECK(r.all_hold);
  const PhiMap phi(FieldConfig(3, 2));
  for (const auto& e : r.entries) {
    CHECK(e.holds);
    const Rational g = phi(e.galois);
    if (e.state == "S")
      CHECK(e.canonical == g);
    else
      CHECK(e.canonical == -g / 2);
  }
}
