#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bqm/biortho.hpp"

using namespace bqm;

namespace {

// Bracket computed straight from the definition: frob(v)^T A v / (v . v).
FieldElement naive_bracket(const StateVector& v, const Matrix& a) {
  const auto& c = v.config();
  auto num = FieldElement::zero(c), den = FieldElement::zero(c);
  for (std::size_t r = 0; r < v.size(); ++r) {
    den += frobenius(v[r]) * v[r];
    for (std::size_t s = 0; s < v.size(); ++s) num += frobenius(v[r]) * a(r, s) * v[s];
  }
  return num / den;
}

}  // namespace

TEST_CASE("GF(3) has the two systems {a, b} and {c, d}") {
  const FieldConfig c(3, 1);
  const auto systems = enumerate_biorthogonal_systems(c);
  REQUIRE(systems.size() == 2);
  CHECK(to_string(systems[0].kets[0]) == "[1 0]");
  CHECK(to_string(systems[0].kets[1]) == "[0 1]");
  CHECK(to_string(systems[1].kets[0]) == "[1 1]");
  CHECK(to_string(systems[1].kets[1]) == "[1 -1]");
  for (const auto& s : systems)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t k = 0; k < 2; ++k) CHECK(pairing(s.bras[r], s.kets[k]).is_one() == (r == k));
}

TEST_CASE("GF(9) has three systems; e and f give sigma2") {
  const FieldConfig c(3, 2);
  const auto obs = spin_observables(c);
  REQUIRE(obs.size() == 3);
  CHECK(obs[0].label == "sigma1");
  CHECK(obs[1].label == "sigma2");
  CHECK(obs[2].label == "sigma3");
  for (int axis = 1; axis <= 3; ++axis) CHECK(obs[axis - 1].matrix == pauli(c, axis));
  CHECK(pauli(c, 2) == parse_matrix(c, "[0 -i; i 0]"));
  CHECK_THROWS_AS(pauli(FieldConfig(3, 1), 2), InvalidArgument);
}

TEST_CASE("system counts and coverage") {
  // Each physical point has exactly one orthogonal partner.
  for (std::uint32_t p : {3u, 7u, 11u})
    for (unsigned d : {1u, 2u}) {
      const FieldConfig c(p, d);
      std::size_t physical = 0;
      for (const auto& s : enumerate_projective(c, 2)) physical += s.physical();
      CHECK(enumerate_biorthogonal_systems(c).size() * 2 == physical);
      CHECK(physical_states_covered(c));
    }
}

TEST_CASE("make_system rejects degenerate or non-orthogonal input") {
  const FieldConfig c(3, 2);
  CHECK_THROWS_AS(make_system({parse_vector(c, "[1 1+i]"), parse_vector(c, "[1 -1-i]")}), InvalidArgument);
  CHECK_THROWS_AS(make_system({parse_vector(c, "[1 0]"), parse_vector(c, "[1 1]")}), InvalidArgument);
  CHECK_THROWS_AS(make_system({parse_vector(c, "[1 0]")}), InvalidArgument);
  CHECK(!is_ortho_nondegenerate({parse_vector(c, "[1 0]"), parse_vector(c, "[1 1]")}));
}

TEST_CASE("build_observable and spectral_decompose round-trip") {
  const FieldConfig c(7, 2);
  for (const auto& s : enumerate_biorthogonal_systems(c))
    for (std::int64_t a : {1, 3})
      for (std::int64_t b : {-1, 5}) {
        const auto obs = build_observable(s, {FieldElement(c, a), FieldElement(c, b)});
        const auto back = spectral_decompose(obs.matrix, s);
        REQUIRE(back.size() == 2);
        CHECK(back[0].eigenvalue == FieldElement(c, a));
        CHECK(back[1].eigenvalue == FieldElement(c, b));
      }
  const auto s0 = enumerate_biorthogonal_systems(c).front();
  CHECK_THROWS_AS(build_observable(s0, {FieldElement(c, 0, 1), FieldElement(c, 1)}), InvalidArgument);
  CHECK_THROWS_AS(spectral_decompose(parse_matrix(c, "[1 1; 0 1]"), s0), InvalidArgument);
}

TEST_CASE("brackets match the definition and are real for every physical state") {
  for (std::uint32_t p : {3u, 7u}) {
    const FieldConfig c(p, 2);
    for (const auto& s : enumerate_projective(c, 2)) {
      if (!s.physical()) {
        CHECK_THROWS_AS(bracket(s.rep(), pauli(c, 1)), InvalidArgument);
        continue;
      }
      for (const auto& o : spin_observables(c)) {
        const auto b = bracket(s.rep(), o.matrix);
        CHECK(b == naive_bracket(s.rep(), o.matrix));
        CHECK(b.is_real());
      }
    }
  }
}

TEST_CASE("a non-hermitian matrix gives a non-real bracket and is rejected") {
  const FieldConfig c(3, 2);
  CHECK_THROWS_AS(bracket(parse_vector(c, "[1 1]"), parse_matrix(c, "[0 i; 0 0]")), InvalidArgument);
}

TEST_CASE("GF(3) expectation cells") {
  const FieldConfig c(3, 1);
  const PhiMap phi(c);
  const auto m = expectation(parse_vector(c, "[1 -1]"), pauli(c, 1), phi);
  CHECK(m.expectation == -1);
  CHECK(m.variance == 0);
  const auto n = expectation(parse_vector(c, "[1 0]"), pauli(c, 1), phi);
  CHECK(n.expectation == 0);
  CHECK(n.variance == 1);
}

TEST_CASE("state labels") {
  const FieldConfig c(3, 2);
  std::string labels;
  for (const auto& s : enumerate_projective(c, 2))
    if (s.physical()) labels += state_label(s);
  CHECK(labels.size() == 6);
  CHECK(state_label(canonicalize(parse_vector(c, "[1 i]"))) == "e");
  CHECK(state_label(canonicalize(parse_vector(c, "[1 -i]"))) == "f");
}

TEST_CASE("GF(7) table cells are all (+-1, 0) or (0, 1)") {
  const auto t = table_report(FieldConfig(7, 1));
  CHECK(t.rows.size() == 8);
  CHECK(t.observables.size() == 4);
  for (const auto& r : t.rows)
    for (const auto& cell : r.cells) {
      const bool eig = (cell.expectation == 1 || cell.expectation == -1) && cell.variance == 0;
      const bool mid = cell.expectation == 0 && cell.variance == 1;
      CHECK((eig || mid));
      CHECK(!cell.expectation.is_zero() == (cell.delta && *cell.delta == 0));
    }
}

TEST_CASE("variance is reported unclamped for non-spin observables") {
  const FieldConfig c(7, 1);
  const PhiMap phi(c);
  const auto s = enumerate_biorthogonal_systems(c).front();
  // Eigenvalues 2 and 3: on a superposition phi(<A^2>) - phi(<A>)^2 can be negative.
  const auto obs = build_observable(s, {FieldElement(c, 2), FieldElement(c, 3)});
  bool negative_seen = false;
  for (const auto& st : enumerate_projective(c, 2)) {
    if (!st.physical()) continue;
    const auto m = expectation(st.rep(), obs.matrix, phi);
    CHECK(m.negative_variance == (m.variance < 0));
    negative_seen = negative_seen || m.negative_variance;
  }
  CHECK(negative_seen);
}
