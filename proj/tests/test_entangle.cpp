#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bqm/entangle.hpp"

using namespace bqm;

namespace {

// Census by brute force over every nonzero 4-vector; products are found by
// forming all tensor products rather than through the determinant.
Census brute_census(const FieldConfig& c) {
  std::set<std::string> products;
  const auto singles = enumerate_projective(c, 2);
  for (const auto& x : singles)
    for (const auto& y : singles) products.insert(to_string(canonicalize(tensor(x.rep(), y.rep())).rep()));
  Census out;
  const auto q = c.order();
  std::vector<FieldElement> es;
  for (std::uint64_t k = 0; k < q; ++k) es.push_back(FieldElement::from_index(c, k));
  std::size_t nonzero = 0, so_total = 0, so_product = 0;
  std::set<std::string> seen;
  for (const auto& a : es)
    for (const auto& b : es)
      for (const auto& d : es)
        for (const auto& e : es) {
          const StateVector v(c, {a, b, d, e});
          if (v.is_zero()) continue;
          ++nonzero;
          const auto key = to_string(canonicalize(v).rep());
          if (!seen.insert(key).second) continue;
          const bool so = is_self_orthogonal(v);
          so_total += so;
          if (products.count(key)) so_product += so;
        }
  out.inequivalent = nonzero / (q - 1);
  out.product = products.size();
  out.product_self_orthogonal = so_product;
  out.product_physical = out.product - so_product;
  out.entangled = out.inequivalent - out.product;
  out.entangled_self_orthogonal = so_total - so_product;
  out.entangled_physical = out.entangled - out.entangled_self_orthogonal;
  return out;
}

Rational naive_correlator(const StateVector& v, int i, int j) {
  const auto& c = v.config();
  const auto m = kron(pauli(c, i), pauli(c, j));
  auto num = FieldElement::zero(c), den = FieldElement::zero(c);
  for (std::size_t r = 0; r < 4; ++r) {
    den += frobenius(v[r]) * v[r];
    for (std::size_t s = 0; s < 4; ++s) num += frobenius(v[r]) * m(r, s) * v[s];
  }
  return PhiMap(c)(num / den);
}

}  // namespace

TEST_CASE("census matches brute force") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const FieldConfig c(p, d);
    const auto a = census(c), b = brute_census(c);
    CAPTURE(c.name());
    CHECK(a.inequivalent == b.inequivalent);
    CHECK(a.product == b.product);
    CHECK(a.product_physical == b.product_physical);
    CHECK(a.product_self_orthogonal == b.product_self_orthogonal);
    CHECK(a.entangled == b.entangled);
    CHECK(a.entangled_self_orthogonal == b.entangled_self_orthogonal);
    CHECK(a.entangled_physical == b.entangled_physical);
  }
}

TEST_CASE("census values over GF(3) and GF(9)") {
  const auto a = census(FieldConfig(3, 1));
  CHECK(a.inequivalent == 40);
  CHECK(a.product == 16);
  CHECK(a.entangled == 24);
  CHECK(a.entangled_self_orthogonal == 16);
  CHECK(a.entangled_physical == 8);
  const auto b = census(FieldConfig(3, 2));
  CHECK(b.inequivalent == 820);
  CHECK(b.product == 100);
  CHECK(b.product_physical == 36);
  CHECK(b.product_self_orthogonal == 64);
  CHECK(b.entangled == 720);
  CHECK(b.entangled_self_orthogonal == 216);
  CHECK(b.entangled_physical == 504);
}

TEST_CASE("classify uses the determinant") {
  const FieldConfig c(3, 2);
  CHECK(classify(parse_vector(c, "[1 0 0 0]")).kind == StateKind::product);
  CHECK(classify(parse_vector(c, "[0 1 -1 0]")).kind == StateKind::entangled);
  CHECK(classify(parse_vector(c, "[0 1 -1 0]")).label == "S");
  CHECK(classify(parse_vector(c, "[1 0 1+i 1]")).label == "T");
  CHECK(classify(parse_vector(c, "[-1 0 -1 -1-i]")).label == "U");
  CHECK_THROWS_AS(classify(parse_vector(c, "[1 0 0]")), InvalidArgument);
}

TEST_CASE("correlators agree with the definition for every physical state") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}}) {
    const FieldConfig c(p, d);
    for (const auto& s : two_particle_states(c)) {
      if (!s.physical) {
        CHECK_THROWS_AS(correlator(s, 1, 1), InvalidArgument);
        continue;
      }
      for (int i : spin_axes(c))
        for (int j : spin_axes(c)) CHECK(correlator(s, i, j) == naive_correlator(s.state.rep(), i, j));
    }
  }
}

TEST_CASE("singlet, T and U correlators") {
  const FieldConfig c3(3, 1), c9(3, 2);
  const auto s3 = named_state(c3, "S");
  CHECK(correlator(s3, 1, 1) == -1);
  CHECK(correlator(s3, 3, 3) == -1);
  CHECK(correlator(s3, 1, 3) == 0);
  CHECK(correlator(s3, 3, 1) == 0);
  const auto t = named_state(c9, "T");
  CHECK(correlator(t, 1, 1) == -1);
  CHECK(correlator(t, 1, 3) == -1);
  CHECK(correlator(t, 3, 1) == 1);
  CHECK(correlator(t, 3, 3) == 0);
  const auto u = named_state(c9, "U");
  CHECK(correlator(u, 1, 1) == -1);
  CHECK(correlator(u, 1, 3) == -1);
  CHECK(correlator(u, 3, 3) == -1);
  CHECK(correlator(u, 3, 1) == 1);
}

TEST_CASE("CHSH values of S, T and U") {
  const FieldConfig c3(3, 1), c9(3, 2);
  const auto s = named_state(c3, "S");
  CHECK(chsh(s, 1, 3, 1, 3).value == 0);
  CHECK(chsh(s, 3, 1, 3, 1).value == 0);
  CHECK(chsh(s, 1, 3, 3, 1).value == -2);
  CHECK(chsh(s, 3, 1, 1, 3).value == -2);
  const auto t = named_state(c9, "T");
  CHECK(chsh(t, 1, 3, 1, 3).value == -1);
  CHECK(chsh(t, 3, 1, 1, 3).value == 1);
  CHECK(chsh(t, 3, 1, 3, 1).value == 1);
  CHECK(chsh(t, 1, 3, 3, 1).value == -3);
  const auto u = named_state(c9, "U");
  CHECK(chsh(u, 1, 3, 1, 3).value == 0);
  CHECK(chsh(u, 3, 1, 1, 3).value == 0);
  CHECK(chsh(u, 3, 1, 3, 1).value == 0);
  CHECK(chsh(u, 1, 3, 3, 1).value == -4);
  CHECK_THROWS_AS(chsh(u, 1, 1, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(chsh(u, 1, -1, 3, 1), InvalidArgument);
}

TEST_CASE("CHSH histograms over GF(9)") {
  const FieldConfig c(3, 2);
  CHECK(chsh_scan(named_state(c, "S")).histogram == std::array<std::size_t, 5>{6, 24, 6, 0, 0});
  CHECK(chsh_scan(named_state(c, "T")).histogram == std::array<std::size_t, 5>{6, 18, 6, 6, 0});
  CHECK(chsh_scan(named_state(c, "U")).histogram == std::array<std::size_t, 5>{12, 12, 4, 4, 4});
  CHECK(chsh_quadruples(c).size() == 36);
  CHECK(chsh_quadruples(FieldConfig(3, 1)).size() == 4);
}

TEST_CASE("bounds") {
  const auto b3 = chsh_bound(FieldConfig(3, 1));
  CHECK(b3.bound == 2);
  CHECK(b3.product_bound <= 2);
  CHECK(b3.states_scanned == 24);
  const auto b9 = chsh_bound(FieldConfig(3, 2));
  CHECK(b9.bound == 4);
  CHECK(b9.product_bound <= 2);
  CHECK(b9.representative_bound == 4);
  CHECK(b9.states_scanned == 540);
}

TEST_CASE("product states never exceed 2") {
  for (auto [p, d] : {std::pair{7u, 1u}, {7u, 2u}, {11u, 1u}}) {
    const auto b = chsh_bound(FieldConfig(p, d));
    CHECK(b.product_bound <= 2);
    CHECK(b.bound <= 4);
  }
}

TEST_CASE("single-spin expectations of the singlet vanish") {
  const auto s = named_state(FieldConfig(3, 2), "S");
  for (int side : {1, 2})
    for (int a : {1, 2, 3}) CHECK(single_spin(s, side, a) == 0);
  CHECK_THROWS_AS(single_spin(s, 3, 1), InvalidArgument);
}

TEST_CASE("named states and labels") {
  const FieldConfig c3(3, 1);
  CHECK(named_state(c3, "(ab)").kind == StateKind::entangled);
  CHECK(named_state(c3, "[1 0 0 -1]").label == "(ab)");
  CHECK_THROWS_AS(named_state(c3, "T"), InvalidArgument);
  CHECK(named_state(FieldConfig(7, 1), "S").physical);
  std::size_t named = 0;
  for (const auto& s : two_particle_states(c3))
    if (s.physical && s.kind == StateKind::entangled) named += s.label.front() == '(' || s.label == "S";
  CHECK(named == 8);
}
