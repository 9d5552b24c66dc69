#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "bqm/groups.hpp"

using namespace bqm;

namespace {

// Counts 2x2 matrices with M^dagger M = c * 1 (c a nonzero element of GF(p))
// by brute force, then divides by the nonzero scalars.
std::size_t brute_group_order(const FieldConfig& cfg) {
  std::vector<FieldElement> es;
  for (std::uint64_t k = 0; k < cfg.order(); ++k) es.push_back(FieldElement::from_index(cfg, k));
  std::size_t n = 0;
  for (const auto& a : es)
    for (const auto& b : es)
      for (const auto& c : es)
        for (const auto& d : es) {
          Matrix m(cfg, 2, 2);
          m(0, 0) = a;
          m(0, 1) = b;
          m(1, 0) = c;
          m(1, 1) = d;
          const auto g = m.dagger() * m;
          if (!g(0, 1).is_zero() || !g(1, 0).is_zero() || g(0, 0) != g(1, 1)) continue;
          if (g(0, 0).is_zero() || !g(0, 0).is_real()) continue;
          ++n;
        }
  return n / (cfg.order() - 1);
}

std::vector<std::set<std::size_t>> brute_classes(const FiniteGroup& g) {
  std::vector<std::set<std::size_t>> out;
  std::set<std::size_t> done;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done.count(x)) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) {
      std::size_t hinv = 0;
      while (g.mul[h][hinv] != g.identity) ++hinv;
      cls.insert(g.mul[g.mul[h][x]][hinv]);
    }
    done.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

}  // namespace

TEST_CASE("group orders match brute force") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {7u, 1u}, {11u, 1u}, {7u, 2u}}) {
    const FieldConfig c(p, d);
    CAPTURE(c.name());
    CHECK(enumerate_group(c).order() == brute_group_order(c));
  }
  CHECK(enumerate_group(FieldConfig(3, 1)).order() == 8);
  CHECK(enumerate_group(FieldConfig(3, 2)).order() == 24);
}

TEST_CASE("multiplication table is a group and matches matrices") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const auto g = enumerate_group(FieldConfig(p, d));
    const auto& t = g.table;
    CHECK(g.elements[t.identity].label == "e");
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::set<std::size_t> row(t.mul[a].begin(), t.mul[a].end());
      CHECK(row.size() == g.order());
      for (std::size_t b = 0; b < g.order(); ++b) {
        CHECK(t.mul[a][b] == g.find(g.elements[a].matrix * g.elements[b].matrix));
        for (std::size_t c = 0; c < g.order(); c += 3) CHECK(t.mul[t.mul[a][b]][c] == t.mul[a][t.mul[b][c]]);
      }
    }
  }
}

TEST_CASE("elements are canonical and permute the physical points") {
  const auto g = enumerate_group(FieldConfig(3, 2));
  CHECK(g.point_labels == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  for (std::size_t k = 0; k < g.order(); ++k) {
    const auto& e = g.elements[k];
    const auto& m = e.matrix;
    CHECK((m(0, 0).is_one() || (m(0, 0).is_zero() && m(0, 1).is_one())));
    CHECK(m.dagger() * m == Matrix::identity(m.config(), 2).scaled(e.similitude));
    std::set<std::size_t> img(e.perm.begin(), e.perm.end());
    CHECK(img.size() == g.points.size());
    for (std::size_t pt = 0; pt < g.points.size(); ++pt)
      CHECK(act(g, k, g.points[pt], ActionMode::single) == g.points[e.perm[pt]]);
    CHECK(g.find(e.label) == k);
  }
  CHECK_THROWS_AS(g.find("(xyz)"), InvalidArgument);
}

TEST_CASE("D4 and S4 structure") {
  const auto g3 = enumerate_group(FieldConfig(3, 1));
  const auto r3 = verify_isomorphism(g3);
  CHECK(r3.target == "D4");
  CHECK(r3.passed());
  CHECK(r3.class_sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  const auto g9 = enumerate_group(FieldConfig(3, 2));
  const auto r9 = verify_isomorphism(g9);
  CHECK(r9.target == "S4");
  CHECK(r9.passed());
  CHECK(r9.class_sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(!is_abelian(g9.table));
  const auto r7 = verify_isomorphism(enumerate_group(FieldConfig(7, 1)));
  CHECK(r7.target == "D8");
  CHECK(r7.passed());
}

TEST_CASE("conjugacy classes match brute force") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const auto g = enumerate_group(FieldConfig(p, d));
    auto brute = brute_classes(g.table);
    std::set<std::set<std::size_t>> a(brute.begin(), brute.end()), b;
    for (const auto& c : conjugacy_classes(g.table)) b.insert(std::set<std::size_t>(c.begin(), c.end()));
    CHECK(a == b);
  }
}

TEST_CASE("small group helpers") {
  const auto z4 = cyclic_group(4);
  CHECK(element_order(z4, 1) == 4);
  CHECK(inverse_of(z4, 1) == 3);
  const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(klein.order() == 4);
  CHECK(is_abelian(klein));
  CHECK(check_dihedral(klein, 2).passed());
  CHECK(!check_dihedral(z4, 2).passed());
  CHECK(generated_subgroup(z4, {2}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("transformation of the spin observables over GF(3)") {
  const auto g = enumerate_group(FieldConfig(3, 1));
  // (ab) = sigma1 swaps the two components: sigma3 -> -sigma3, sigma1 fixed.
  const auto ab = g.find("(ab)");
  auto s3 = conjugate_observable(g, ab, 3);
  REQUIRE(s3);
  CHECK(s3->axis == 3);
  CHECK(s3->sign == -1);
  auto s1 = conjugate_observable(g, ab, 1);
  REQUIRE(s1);
  CHECK(s1->axis == 1);
  CHECK(s1->sign == 1);
  for (std::size_t k = 0; k < g.order(); ++k)
    for (int axis : {1, 3}) {
      const auto r = conjugate_observable(g, k, axis);
      REQUIRE(r);
      const auto& m = g.elements[k].matrix;
      auto expect = m * pauli(g.config, axis) * m.inverse();
      auto got = pauli(g.config, r->axis);
      CHECK((expect == (r->sign > 0 ? got : got.negated())));
    }
}

TEST_CASE("orbits: Burnside equals direct count and orbit-stabilizer holds") {
  for (auto [p, d] : {std::pair{3u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const FieldConfig c(p, d);
    const auto g = enumerate_group(c);
    const auto states = physical_entangled_states(c);
    for (auto mode : {OrbitMode::global, OrbitMode::local}) {
      const auto r = orbit_report(g, states, mode);
      CHECK(r.burnside_count == r.orbits.size());
      CHECK(r.acting_order == (mode == OrbitMode::local ? g.order() * g.order() : g.order()));
      std::size_t total = 0;
      for (const auto& o : r.orbits) {
        CHECK(o.members.size() * o.stabilizer_order == r.acting_order);
        total += o.members.size();
      }
      CHECK(total == states.size());
    }
  }
}

TEST_CASE("GF(9) orbit structure") {
  const FieldConfig c(3, 2);
  const auto g = enumerate_group(c);
  const auto states = physical_entangled_states(c);
  CHECK(states.size() == 504);
  const auto local = orbit_report(g, states, OrbitMode::local);
  std::map<std::string, std::size_t> by_label;
  for (const auto& o : local.orbits) by_label[o.label] = o.members.size();
  CHECK(by_label == std::map<std::string, std::size_t>{{"S", 24}, {"T", 192}, {"U", 288}});
  const auto global = orbit_report(g, states, OrbitMode::global);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& o : global.orbits) ++sizes[o.members.size()];
  CHECK(sizes == std::map<std::size_t, std::size_t>{{1, 1}, {3, 1}, {6, 2}, {8, 4}, {12, 4}, {24, 17}});
}

TEST_CASE("every GF(3) entangled state reaches the singlet locally") {
  const FieldConfig c(3, 1);
  const auto g = enumerate_group(c);
  const auto s = named_state(c, "S").state;
  for (const auto& st : physical_entangled_states(c)) {
    const auto t = find_local_transform(g, st);
    CHECK(t.representative == s);
    const auto img = act(g, t.side2, act(g, t.side1, st, ActionMode::local_1), ActionMode::local_2);
    CHECK(img == s);
  }
  const auto ab = find_local_transform(g, named_state(c, "(ab)").state);
  CHECK(g.elements[ab.side1].label == "(ab)");
  CHECK(g.elements[ab.side2].label == "e");
}

TEST_CASE("reference labels, up to the typo report") {
  const auto r3 = compare_with_reference(enumerate_group(FieldConfig(3, 1)));
  CHECK(r3.matrices_matched == 8);
  CHECK(r3.discrepancies.empty());
  CHECK(r3.classes_match);
  const auto r9 = compare_with_reference(enumerate_group(FieldConfig(3, 2)));
  CHECK(r9.matrices_matched == 24);
  CHECK(r9.classes_match);
  CHECK(r9.discrepancies.size() == 4);
  std::set<std::string> printed;
  for (const auto& d : r9.discrepancies) {
    CHECK(d.printed != d.computed);
    CHECK_NOTHROW(enumerate_group(FieldConfig(3, 2)).find(d.computed));
    printed.insert(d.printed);
  }
  CHECK(printed.count("(add)(bed)"));
  CHECK(printed.count("(afd)(bed)"));
  CHECK_THROWS_AS(compare_with_reference(enumerate_group(FieldConfig(7, 1))), InvalidArgument);
}

TEST_CASE("action modes") {
  CHECK(parse_action_mode("local_1") == ActionMode::local_1);
  CHECK_THROWS_AS(parse_action_mode("sideways"), InvalidArgument);
  CHECK(parse_orbit_mode("global") == OrbitMode::global);
  CHECK_THROWS_AS(parse_orbit_mode("x"), InvalidArgument);
  const FieldConfig c(3, 2);
  const auto g = enumerate_group(c);
  const auto s = named_state(c, "S").state;
  for (std::size_t k = 0; k < g.order(); ++k) CHECK(act(g, k, s, ActionMode::global) == s);
  CHECK(trivial_group(c).order() == 1);
}
