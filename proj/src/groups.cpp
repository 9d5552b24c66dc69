#include "bqm/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace bqm {

// ---------------------------------------------------------------------------
// Abstract groups

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  FiniteGroup g;
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  FiniteGroup g;
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      g.mul[x][y] = a.mul[x / b.order()][y / b.order()] * b.order() + b.mul[x % b.order()][y % b.order()];
  g.identity = a.identity * b.order() + b.identity;
  return g;
}

std::size_t inverse_of(const FiniteGroup& g, std::size_t x) {
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul[x][y] == g.identity) return y;
  throw InvariantViolation("element without inverse");
}

std::size_t element_order(const FiniteGroup& g, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != g.identity; y = g.mul[y][x]) {
    if (++k > g.order()) throw InvariantViolation("element of unbounded order");
  }
  return k;
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (g.mul[a][b] != g.mul[b][a]) return false;
  return true;
}

std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> frontier{g.identity};
  in[g.identity] = true;
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto s : gens) {
      const auto y = g.mul[x][s];
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::size_t> inv(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) inv[h] = inverse_of(g, h);
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const auto y = g.mul[g.mul[h][x]][inv[h]];
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size());
  return out;
}

std::vector<std::size_t> dihedral_class_sizes(std::size_t n) {
  std::vector<std::size_t> out{1};
  if (n % 2 == 0) {
    out.push_back(1);
    for (std::size_t k = 1; k < n / 2; ++k) out.push_back(2);
    out.push_back(n / 2);
    out.push_back(n / 2);
  } else {
    for (std::size_t k = 0; k < (n - 1) / 2; ++k) out.push_back(2);
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IsomorphismReport check_dihedral(const FiniteGroup& g, std::size_t n) {
  IsomorphismReport r;
  r.target = "D" + std::to_string(n);
  r.order = g.order();
  r.class_sizes = class_sizes(g);
  r.order_ok = g.order() == 2 * n;
  r.class_equation_ok = r.class_sizes == dihedral_class_sizes(n);
  if (!r.order_ok) return r;
  for (std::size_t rot = 0; rot < g.order() && !r.relations_ok; ++rot) {
    if (element_order(g, rot) != n) continue;
    const auto cyc = generated_subgroup(g, {rot});
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (std::binary_search(cyc.begin(), cyc.end(), s) || element_order(g, s) != 2) continue;
      const auto sr = g.mul[s][rot];
      if (g.mul[sr][sr] != g.identity) continue;
      if (generated_subgroup(g, {rot, s}).size() != g.order()) continue;
      r.relations_ok = true;
      r.generators = {rot, s};
      break;
    }
  }
  return r;
}

IsomorphismReport check_s4(const FiniteGroup& g) {
  IsomorphismReport r;
  r.target = "S4";
  r.order = g.order();
  r.class_sizes = class_sizes(g);
  r.order_ok = g.order() == 24;
  r.class_equation_ok = r.class_sizes == std::vector<std::size_t>{1, 3, 6, 6, 8} && !is_abelian(g);
  if (!r.order_ok) return r;
  for (std::size_t a = 0; a < g.order() && !r.relations_ok; ++a) {
    if (element_order(g, a) != 2) continue;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (element_order(g, b) != 3 || element_order(g, g.mul[a][b]) != 4) continue;
      if (generated_subgroup(g, {a, b}).size() != 24) continue;
      r.relations_ok = true;
      r.generators = {a, b};
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Matrix groups

namespace {

StateVector flatten(const Matrix& m) {
  return StateVector(m.config(), {m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
}

Matrix unflatten(const StateVector& v) {
  Matrix m(v.config(), 2, 2);
  m(0, 0) = v[0];
  m(0, 1) = v[1];
  m(1, 0) = v[2];
  m(1, 1) = v[3];
  return m;
}

std::string cycle_label(const std::vector<std::size_t>& perm, const std::vector<std::string>& labels) {
  const bool letters = std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.size() == 1; });
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k] || perm[k] == k) continue;
    out += '(';
    for (std::size_t j = k; !seen[j]; j = perm[j]) {
      seen[j] = true;
      if (j != k && !letters) out += ' ';
      out += labels[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Similitude factor c with M^dagger M = c * 1, or empty.
std::optional<FieldElement> similitude(const Matrix& m) {
  const auto g = m.dagger() * m;
  if (!g(0, 1).is_zero() || !g(1, 0).is_zero() || !(g(0, 0) == g(1, 1)) || g(0, 0).is_zero())
    return std::nullopt;
  return g(0, 0);
}

void fill_permutation(ProjectiveGroup& g, GroupElement& e, const std::map<std::size_t, std::size_t>& point_of) {
  for (const auto& pt : g.points) {
    const auto img = canonicalize(e.matrix * pt.rep());
    const auto it = point_of.find(projective_index(img));
    if (it == point_of.end())
      throw InvariantViolation("group element maps a physical state to a self-orthogonal one");
    e.perm.push_back(it->second);
  }
  e.label = cycle_label(e.perm, g.point_labels);
}

ProjectiveGroup make_group(const FieldConfig& config, bool trivial) {
  ProjectiveGroup g{config, {}, {}, {}, {}};
  std::map<std::size_t, std::size_t> point_of;
  for (const auto& sys : enumerate_biorthogonal_systems(config))
    for (const auto& k : sys.kets) {
      auto s = canonicalize(k);
      point_of[projective_index(s)] = g.points.size();
      g.point_labels.push_back(state_label(s));
      g.points.push_back(std::move(s));
    }

  const auto id = Matrix::identity(config, 2);
  g.elements.push_back({id, FieldElement::one(config), "", {}});
  if (!trivial) {
    for (const auto& s : enumerate_projective(config, 4)) {
      const auto m = unflatten(s.rep());
      if (m == id) continue;
      if (const auto c = similitude(m)) g.elements.push_back({m, *c, "", {}});
    }
  }
  for (auto& e : g.elements) fill_permutation(g, e, point_of);

  const std::size_t n = g.elements.size();
  g.table.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table.mul[a][b] = g.find(g.elements[a].matrix * g.elements[b].matrix);
  g.table.identity = 0;
  return g;
}

}  // namespace

std::size_t ProjectiveGroup::find(const std::string& label) const {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k].label == label) return k;
  throw InvalidArgument("no group element labeled " + label);
}

std::size_t ProjectiveGroup::find(const Matrix& m) const {
  const auto c = canonicalize(flatten(m));
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (flatten(elements[k].matrix) == c.rep()) return k;
  throw InvalidArgument("matrix " + to_string(m) + " is not in the group");
}

ProjectiveGroup enumerate_group(const FieldConfig& config) { return make_group(config, false); }

ProjectiveGroup trivial_group(const FieldConfig& config) { return make_group(config, true); }

IsomorphismReport verify_isomorphism(const ProjectiveGroup& g) {
  const auto& cfg = g.config;
  if (cfg.degree() == 1) return check_dihedral(g.table, cfg.p() + 1);
  if (cfg.p() == 3) return check_s4(g.table);
  IsomorphismReport r;
  r.target = "PGL(2," + std::to_string(cfg.p()) + ")";
  r.order = g.order();
  r.class_sizes = class_sizes(g.table);
  r.order_ok = g.order() == std::size_t{cfg.p()} * (std::size_t{cfg.p()} * cfg.p() - 1);
  return r;
}

std::optional<SignedAxis> conjugate_observable(const ProjectiveGroup& g, std::size_t element, int axis) {
  const auto& m = g.elements.at(element).matrix;
  const auto image = m * pauli(g.config, axis) * m.inverse();
  for (int k : spin_axes(g.config)) {
    const auto s = pauli(g.config, k);
    if (image == s) return SignedAxis{k, +1};
    if (image == s.negated()) return SignedAxis{k, -1};
  }
  return std::nullopt;
}

std::string to_string(ActionMode m) {
  switch (m) {
    case ActionMode::single:
      return "single";
    case ActionMode::global:
      return "global";
    case ActionMode::local_1:
      return "local_1";
    case ActionMode::local_2:
      return "local_2";
  }
  return "?";
}

ActionMode parse_action_mode(const std::string& s) {
  for (auto m : {ActionMode::single, ActionMode::global, ActionMode::local_1, ActionMode::local_2})
    if (to_string(m) == s) return m;
  throw InvalidArgument("unknown action mode '" + s + "'");
}

ProjectiveState act(const ProjectiveGroup& g, std::size_t element, const ProjectiveState& s, ActionMode mode) {
  const auto& m = g.elements.at(element).matrix;
  const auto one = Matrix::identity(g.config, 2);
  const std::size_t want = mode == ActionMode::single ? 2 : 4;
  if (s.size() != want)
    throw InvalidArgument(to_string(mode) + " action needs " + std::to_string(want) + " components");
  switch (mode) {
    case ActionMode::single:
      return canonicalize(m * s.rep());
    case ActionMode::global:
      return canonicalize(kron(m, m) * s.rep());
    case ActionMode::local_1:
      return canonicalize(kron(m, one) * s.rep());
    case ActionMode::local_2:
      return canonicalize(kron(one, m) * s.rep());
  }
  throw InvariantViolation("unhandled action mode");
}

std::string to_string(OrbitMode m) { return m == OrbitMode::global ? "global" : "local"; }

OrbitMode parse_orbit_mode(const std::string& s) {
  if (s == "global") return OrbitMode::global;
  if (s == "local") return OrbitMode::local;
  throw InvalidArgument("unknown orbit mode '" + s + "'");
}

namespace {

using Perm = std::vector<std::size_t>;

// Permutation of `states` induced by each group element under `mode`.
std::vector<Perm> induced(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, ActionMode mode) {
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < states.size(); ++k) pos[projective_index(states[k])] = k;
  std::vector<Perm> out;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Perm p(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      const auto it = pos.find(projective_index(act(g, e, states[k], mode)));
      if (it == pos.end()) throw InvalidArgument("the action escapes the given state set");
      p[k] = it->second;
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct Acting {
  std::vector<Perm> global;
  std::vector<Perm> side1;
  std::vector<Perm> side2;
};

Acting acting(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode) {
  Acting a;
  if (mode == OrbitMode::global) {
    a.global = induced(g, states, ActionMode::global);
  } else {
    a.side1 = induced(g, states, ActionMode::local_1);
    a.side2 = induced(g, states, ActionMode::local_2);
  }
  return a;
}

// Calls f(image) for every element of the acting group applied to state k.
template <class F>
void for_each_image(const Acting& a, std::size_t k, F f) {
  if (!a.global.empty()) {
    for (const auto& p : a.global) f(p[k]);
  } else {
    for (const auto& p2 : a.side2)
      for (const auto& p1 : a.side1) f(p1[p2[k]]);
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool is_named(const std::string& label) { return !label.empty() && label.front() != '['; }

}  // namespace

std::vector<Orbit> orbits(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode) {
  const auto a = acting(g, states, mode);
  std::vector<std::size_t> parent(states.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto& gens = mode == OrbitMode::global ? a.global : a.side1;
  for (const auto& p : gens)
    for (std::size_t k = 0; k < states.size(); ++k) parent[find_root(parent, k)] = find_root(parent, p[k]);
  if (mode == OrbitMode::local)
    for (const auto& p : a.side2)
      for (std::size_t k = 0; k < states.size(); ++k) parent[find_root(parent, k)] = find_root(parent, p[k]);

  std::map<std::size_t, std::size_t> orbit_of_root;
  std::vector<Orbit> out;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto root = find_root(parent, k);
    auto it = orbit_of_root.find(root);
    if (it == orbit_of_root.end()) {
      it = orbit_of_root.emplace(root, out.size()).first;
      std::size_t stab = 0;
      for_each_image(a, k, [&](std::size_t img) { stab += img == k; });
      out.push_back({{}, states[k], two_particle_label(states[k]), stab});
    }
    auto& orbit = out[it->second];
    orbit.members.push_back(states[k]);
    if (!is_named(orbit.label)) {
      if (auto l = two_particle_label(states[k]); is_named(l)) orbit.label = std::move(l);
    }
  }
  return out;
}

std::size_t burnside_count(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode) {
  const auto a = acting(g, states, mode);
  std::size_t fixed = 0;
  std::size_t order = 0;
  if (mode == OrbitMode::global) {
    for (const auto& p : a.global) {
      ++order;
      for (std::size_t k = 0; k < states.size(); ++k) fixed += p[k] == k;
    }
  } else {
    for (const auto& p2 : a.side2)
      for (const auto& p1 : a.side1) {
        ++order;
        for (std::size_t k = 0; k < states.size(); ++k) fixed += p1[p2[k]] == k;
      }
  }
  if (fixed % order != 0) throw InvariantViolation("Burnside sum not divisible by the group order");
  return fixed / order;
}

OrbitReport orbit_report(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode) {
  OrbitReport r{mode, mode == OrbitMode::global ? g.order() : g.order() * g.order(), states.size(),
                orbits(g, states, mode), burnside_count(g, states, mode)};
  for (const auto& o : r.orbits)
    if (o.members.size() * o.stabilizer_order != r.acting_order)
      throw InvariantViolation("orbit-stabilizer identity fails for orbit of " + o.label);
  return r;
}

std::vector<ProjectiveState> physical_entangled_states(const FieldConfig& config) {
  std::vector<ProjectiveState> out;
  for (const auto& s : two_particle_states(config))
    if (s.physical && s.kind == StateKind::entangled) out.push_back(s.state);
  return out;
}

LocalTransform find_local_transform(const ProjectiveGroup& g, const ProjectiveState& state) {
  const auto t = classify(state.rep());
  if (t.kind != StateKind::entangled) throw InvalidArgument("state " + t.label + " is not entangled");
  if (!t.physical) throw InvalidArgument("state " + t.label + " is self-orthogonal");

  struct Hit {
    std::size_t g1, g2;
    ProjectiveState image;
  };
  std::vector<Hit> hits;
  for (std::size_t g2 = 0; g2 < g.order(); ++g2)
    for (std::size_t g1 = 0; g1 < g.order(); ++g1)
      hits.push_back({g1, g2, canonicalize(kron(g.elements[g1].matrix, g.elements[g2].matrix) * state.rep())});

  const ProjectiveState* target = nullptr;
  for (const auto& h : hits) {
    const auto label = two_particle_label(h.image);
    const bool rep = label == "S" || (g.config.degree() == 2 && (label == "T" || label == "U"));
    if (rep && g.config.p() == 3) {
      target = &h.image;
      break;
    }
  }
  if (!target) {
    target = &hits.front().image;
    for (const auto& h : hits)
      if (h.image < *target) target = &h.image;
  }
  for (const auto& h : hits)
    if (h.image == *target) return {h.g1, h.g2, h.image, two_particle_label(h.image)};
  throw InvariantViolation("local transform search lost its target");
}

// ---------------------------------------------------------------------------
// Reference data

namespace {

struct RefMatrix {
  const char* label;
  std::int64_t m[2][2][2];
};

struct RefTransform {
  const char* label;
  int image[3];
};

const RefMatrix kPO23[] = {
    {"e", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}},          {"(ab)", {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}},
    {"(cd)", {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}}},      {"(ab)(cd)", {{{0, 0}, {-1, 0}}, {{1, 0}, {0, 0}}}},
    {"(ac)(bd)", {{{1, 0}, {1, 0}}, {{1, 0}, {-1, 0}}}},  {"(ad)(bc)", {{{-1, 0}, {1, 0}}, {{1, 0}, {1, 0}}}},
    {"(acbd)", {{{1, 0}, {-1, 0}}, {{1, 0}, {1, 0}}}},    {"(adbc)", {{{1, 0}, {1, 0}}, {{-1, 0}, {1, 0}}}},
};

const RefMatrix kPU29[] = {
    {"e", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}},
    {"(ab)(ef)", {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}},
    {"(cd)(ef)", {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}}},
    {"(ab)(cd)", {{{0, 0}, {-1, 0}}, {{1, 0}, {0, 0}}}},
    {"(acbd)", {{{1, 0}, {-1, 0}}, {{1, 0}, {1, 0}}}},
    {"(ac)(bd)(ef)", {{{1, 0}, {1, 0}}, {{1, 0}, {-1, 0}}}},
    {"(adbc)", {{{1, 0}, {1, 0}}, {{-1, 0}, {1, 0}}}},
    {"(ad)(bc)(ef)", {{{-1, 0}, {1, 0}}, {{1, 0}, {1, 0}}}},
    {"(aebf)", {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}},
    {"(ae)(bf)(cd)", {{{1, 0}, {0, -1}}, {{0, 1}, {-1, 0}}}},
    {"(afbe)", {{{1, 0}, {0, -1}}, {{0, -1}, {1, 0}}}},
    {"(af)(be)(cd)", {{{1, 0}, {0, 1}}, {{0, -1}, {-1, 0}}}},
    {"(cedf)", {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}},
    {"(ab)(ce)(df)", {{{0, 0}, {0, -1}}, {{1, 0}, {0, 0}}}},
    {"(cfde)", {{{1, 0}, {0, 0}}, {{0, 0}, {0, -1}}}},
    {"(ab)(cf)(de)", {{{0, 0}, {0, 1}}, {{1, 0}, {0, 0}}}},
    {"(ace)(bdf)", {{{1, 0}, {0, -1}}, {{1, 0}, {0, 1}}}},
    {"(adf)(bce)", {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}}},
    {"(acf)(bde)", {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}},
    {"(ade)(bcf)", {{{-1, 0}, {0, 1}}, {{1, 0}, {0, 1}}}},
    {"(aec)(bfd)", {{{1, 0}, {1, 0}}, {{0, 1}, {0, -1}}}},
    {"(afd)(bec)", {{{-1, 0}, {1, 0}}, {{0, 1}, {0, 1}}}},
    {"(aed)(bfc)", {{{1, 0}, {-1, 0}}, {{0, 1}, {0, 1}}}},
    {"(afc)(bed)", {{{1, 0}, {1, 0}}, {{0, -1}, {0, 1}}}},
};

// Images of (sigma1, sigma3) over GF(3) and of (sigma1, sigma2, sigma3)
// over GF(9), as signed axes.
const RefTransform kPO23Table[] = {
    {"e", {1, 3}},         {"(ab)", {1, -3}},      {"(cd)", {-1, 3}},     {"(ab)(cd)", {-1, -3}},
    {"(ac)(bd)", {3, 1}},  {"(ad)(bc)", {-3, -1}}, {"(acbd)", {-3, 1}},   {"(adbc)", {3, -1}},
};

const RefTransform kPU29Table[] = {
    {"e", {1, 2, 3}},
    {"(ab)(ef)", {1, -2, -3}},
    {"(ab)(cd)", {-1, 2, -3}},
    {"(cd)(ef)", {-1, -2, 3}},
    {"(aebf)", {1, -3, 2}},
    {"(afbe)", {1, 3, -2}},
    {"(acbd)", {-3, 2, 1}},
    {"(adbc)", {3, 2, -1}},
    {"(cedf)", {2, -1, 3}},
    {"(cfde)", {-2, 1, 3}},
    {"(ae)(bf)(cd)", {-1, 3, 2}},
    {"(af)(be)(cd)", {-1, -3, -2}},
    {"(ac)(bd)(ef)", {3, -2, 1}},
    {"(ad)(bc)(ef)", {-3, -2, -1}},
    {"(ab)(ce)(df)", {2, 1, -3}},
    {"(ab)(cf)(de)", {-2, -1, -3}},
    {"(ace)(bdf)", {2, 3, 1}},
    {"(adf)(bce)", {2, -3, -1}},
    {"(acf)(bde)", {-2, -3, 1}},
    {"(ade)(bcf)", {-2, 3, -1}},
    {"(aec)(bfd)", {3, 1, 2}},
    {"(afc)(bed)", {3, -1, -2}},
    {"(aed)(bfc)", {-3, -1, 2}},
    {"(afd)(bed)", {-3, 1, -2}},
};

const std::vector<std::vector<std::string>> kPO23Classes = {
    {"e"}, {"(ab)(cd)"}, {"(ab)", "(cd)"}, {"(ac)(bd)", "(ad)(bc)"}, {"(acbd)", "(adbc)"},
};

const std::vector<std::vector<std::string>> kPU29Classes = {
    {"e"},
    {"(ab)(ef)", "(ab)(cd)", "(cd)(ef)"},
    {"(acbd)", "(adbc)", "(aebf)", "(afbe)", "(cedf)", "(cfde)"},
    {"(ac)(bd)(ef)", "(ad)(bc)(ef)", "(ae)(bf)(cd)", "(af)(be)(cd)", "(ab)(ce)(df)", "(ab)(cf)(de)"},
    {"(ace)(bdf)", "(adf)(bce)", "(acf)(bde)", "(ade)(bcf)", "(aec)(bed)", "(add)(bed)", "(add)(bfc)",
     "(afc)(bed)"},
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const auto up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
      diag = up;
    }
  }
  return row[b.size()];
}

Matrix ref_matrix(const FieldConfig& cfg, const RefMatrix& r) {
  Matrix m(cfg, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = FieldElement(cfg, r.m[i][j][0], r.m[i][j][1]);
  return m;
}

}  // namespace

ReferenceComparison compare_with_reference(const ProjectiveGroup& g) {
  const auto& cfg = g.config;
  if (cfg.p() != 3) throw InvalidArgument("reference data exists for GF(3) and GF(9) only");
  const bool nine = cfg.degree() == 2;
  ReferenceComparison r;

  const auto* mats = nine ? kPU29 : kPO23;
  const std::size_t n_mats = nine ? std::size(kPU29) : std::size(kPO23);
  for (std::size_t k = 0; k < n_mats; ++k) {
    ++r.matrices_checked;
    const auto& computed = g.elements[g.find(ref_matrix(cfg, mats[k]))].label;
    if (computed == mats[k].label)
      ++r.matrices_matched;
    else
      r.discrepancies.push_back({"element list", mats[k].label, computed});
  }

  const auto axes = spin_axes(cfg);
  const auto* rows = nine ? kPU29Table : kPO23Table;
  const std::size_t n_rows = nine ? std::size(kPU29Table) : std::size(kPO23Table);
  for (std::size_t k = 0; k < n_rows; ++k) {
    ++r.transform_rows_checked;
    std::string computed = "none";
    for (std::size_t e = 0; e < g.order(); ++e) {
      bool same = true;
      for (std::size_t a = 0; a < axes.size(); ++a) {
        const auto img = conjugate_observable(g, e, axes[a]);
        same = same && img && img->axis * img->sign == rows[k].image[a];
      }
      if (same) computed = g.elements[e].label;
    }
    if (computed == rows[k].label)
      ++r.transform_rows_matched;
    else
      r.discrepancies.push_back({"transformation table", rows[k].label, computed});
  }

  std::vector<std::vector<std::string>> computed_classes;
  for (const auto& c : conjugacy_classes(g.table)) {
    std::vector<std::string> labels;
    for (auto e : c) labels.push_back(g.elements[e].label);
    computed_classes.push_back(std::move(labels));
  }
  const auto& printed_classes = nine ? kPU29Classes : kPO23Classes;
  std::size_t resolved_classes = 0;
  for (const auto& printed : printed_classes) {
    std::vector<std::string> known, unknown;
    for (const auto& l : printed) {
      ++r.class_labels_checked;
      const bool is_label =
          std::any_of(g.elements.begin(), g.elements.end(), [&](const auto& e) { return e.label == l; });
      (is_label ? known : unknown).push_back(l);
    }
    r.class_labels_matched += known.size();
    const std::vector<std::string>* home = nullptr;
    for (const auto& c : computed_classes)
      if (!known.empty() && std::find(c.begin(), c.end(), known.front()) != c.end()) home = &c;
    if (!home) continue;
    bool all_known_home = true;
    for (const auto& l : known) all_known_home = all_known_home && std::count(home->begin(), home->end(), l);
    std::vector<std::string> missing;
    for (const auto& l : *home)
      if (std::find(known.begin(), known.end(), l) == known.end()) missing.push_back(l);
    // Pair each misprint with the closest unclaimed computed label.
    while (!unknown.empty() && !missing.empty()) {
      std::size_t bi = 0, bj = 0, best = SIZE_MAX;
      for (std::size_t i = 0; i < unknown.size(); ++i)
        for (std::size_t j = 0; j < missing.size(); ++j)
          if (const auto d = edit_distance(unknown[i], missing[j]); d < best) {
            best = d;
            bi = i;
            bj = j;
          }
      r.discrepancies.push_back({"class list", unknown[bi], missing[bj]});
      unknown.erase(unknown.begin() + static_cast<std::ptrdiff_t>(bi));
      missing.erase(missing.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    if (all_known_home && unknown.empty() && missing.empty()) ++resolved_classes;
  }
  r.classes_match = resolved_classes == printed_classes.size() && printed_classes.size() == computed_classes.size();
  return r;
}

}  // namespace bqm
