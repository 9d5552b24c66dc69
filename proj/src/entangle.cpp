#include "bqm/entangle.hpp"

#include <cstdlib>

namespace bqm {

namespace {

struct NamedVector {
  const char* name;
  std::int64_t c[4][2];
};

// Named representatives, before phase normalization.
const NamedVector kGF3Entangled[] = {
    {"(ab)", {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}},     {"(cd)", {{0, 0}, {1, 0}, {1, 0}, {0, 0}}},
    {"(ab)(cd)", {{1, 0}, {0, 0}, {0, 0}, {1, 0}}},  {"(ad)(bc)", {{1, 0}, {1, 0}, {1, 0}, {-1, 0}}},
    {"(ac)(bd)", {{-1, 0}, {1, 0}, {1, 0}, {1, 0}}}, {"(acbd)", {{1, 0}, {-1, 0}, {1, 0}, {1, 0}}},
    {"(adbc)", {{1, 0}, {1, 0}, {-1, 0}, {1, 0}}},
};
const NamedVector kSinglet = {"S", {{0, 0}, {1, 0}, {-1, 0}, {0, 0}}};
const NamedVector kGF9[] = {
    {"T", {{1, 0}, {0, 0}, {1, 1}, {1, 0}}},
    {"U", {{1, 0}, {0, 0}, {1, 0}, {1, 1}}},
};

StateVector make(const FieldConfig& config, const NamedVector& n) {
  std::vector<FieldElement> c;
  for (const auto& e : n.c) c.emplace_back(config, e[0], e[1]);
  return {config, std::move(c)};
}

std::vector<const NamedVector*> names_for(const FieldConfig& config) {
  std::vector<const NamedVector*> out{&kSinglet};
  if (config.p() != 3) return out;
  if (config.degree() == 1)
    for (const auto& n : kGF3Entangled) out.push_back(&n);
  else
    for (const auto& n : kGF9) out.push_back(&n);
  return out;
}

Matrix signed_pauli(const FieldConfig& config, int axis) {
  const auto m = pauli(config, std::abs(axis));
  return axis < 0 ? m.negated() : m;
}

void require_two_particle(const ProjectiveState& s) {
  if (s.size() != 4) throw InvalidArgument("two-particle states have 4 components");
}

void require_physical(const TwoParticleState& s) {
  if (!s.physical) throw InvalidArgument("state " + s.label + " is self-orthogonal");
}

}  // namespace

std::string to_string(StateKind k) { return k == StateKind::product ? "product" : "entangled"; }

TwoParticleState classify(const StateVector& v) {
  if (v.size() != 4) throw InvalidArgument("two-particle states have 4 components");
  auto s = canonicalize(v);
  const auto& r = s.rep();
  const auto kind = (r[0] * r[3] - r[1] * r[2]).is_zero() ? StateKind::product : StateKind::entangled;
  const bool physical = s.physical();
  auto label = two_particle_label(s);
  return {std::move(s), kind, physical, std::move(label)};
}

std::string two_particle_label(const ProjectiveState& s) {
  require_two_particle(s);
  const auto& cfg = s.rep().config();
  for (const auto* n : names_for(cfg))
    if (canonicalize(make(cfg, *n)) == s) return n->name;
  return to_string(s.rep());
}

TwoParticleState named_state(const FieldConfig& config, const std::string& name) {
  for (const auto* n : names_for(config))
    if (name == n->name) return classify(make(config, *n));
  if (name.find_first_of("0123456789") == std::string::npos)
    throw InvalidArgument("unknown state '" + name + "' over " + config.name());
  return classify(parse_vector(config, name));
}

std::vector<TwoParticleState> two_particle_states(const FieldConfig& config) {
  std::vector<TwoParticleState> out;
  for (const auto& s : enumerate_projective(config, 4)) out.push_back(classify(s.rep()));
  return out;
}

Census census(const FieldConfig& config) {
  Census c;
  for (const auto& s : enumerate_projective(config, 4)) {
    const auto& r = s.rep();
    ++c.inequivalent;
    if ((r[0] * r[3] - r[1] * r[2]).is_zero()) {
      ++c.product;
      ++(s.physical() ? c.product_physical : c.product_self_orthogonal);
    } else {
      ++c.entangled;
      ++(s.physical() ? c.entangled_physical : c.entangled_self_orthogonal);
    }
  }
  return c;
}

Matrix product_spin(const FieldConfig& config, int i, int j) {
  return kron(signed_pauli(config, i), signed_pauli(config, j));
}

Rational correlator(const TwoParticleState& s, int i, int j) {
  require_physical(s);
  const auto& cfg = s.state.rep().config();
  return PhiMap(cfg)(bracket(s.state.rep(), product_spin(cfg, i, j)));
}

Rational single_spin(const TwoParticleState& s, int side, int axis) {
  require_physical(s);
  const auto& cfg = s.state.rep().config();
  if (side != 1 && side != 2) throw InvalidArgument("side must be 1 or 2");
  const auto one = Matrix::identity(cfg, 2);
  const auto m = side == 1 ? kron(signed_pauli(cfg, axis), one) : kron(one, signed_pauli(cfg, axis));
  return PhiMap(cfg)(bracket(s.state.rep(), m));
}

CHSHRecord chsh(const TwoParticleState& s, int A, int a, int B, int b) {
  if (std::abs(A) == std::abs(a) || std::abs(B) == std::abs(b))
    throw InvalidArgument("CHSH needs two different axes on each side");
  const Rational v = correlator(s, A, B) + correlator(s, A, b) + correlator(s, a, B) - correlator(s, a, b);
  return {{A, a, B, b}, s.label, v};
}

std::vector<std::array<int, 4>> chsh_quadruples(const FieldConfig& config) {
  const auto axes = spin_axes(config);
  std::vector<std::array<int, 4>> out;
  for (int A : axes)
    for (int a : axes)
      for (int B : axes)
        for (int b : axes)
          if (A != a && B != b) out.push_back({A, a, B, b});
  return out;
}

CHSHScan chsh_scan(const TwoParticleState& s) {
  require_physical(s);
  const auto& cfg = s.state.rep().config();
  const auto axes = spin_axes(cfg);
  // Correlators indexed by axis; each is used by several quadruples.
  Rational e[4][4];
  for (int i : axes)
    for (int j : axes) e[i][j] = correlator(s, i, j);
  CHSHScan scan;
  scan.state = s.label;
  for (const auto& q : chsh_quadruples(cfg)) {
    const auto [A, a, B, b] = q;
    const Rational v = e[A][B] + e[A][b] + e[a][B] - e[a][b];
    const Rational mag = v < 0 ? Rational(-v) : v;
    const auto bucket = static_cast<std::size_t>(boost::multiprecision::numerator(mag));
    if (boost::multiprecision::denominator(mag) != 1 || bucket > 4)
      throw InvariantViolation("CHSH value out of range: " + to_string(v));
    ++scan.histogram[bucket];
    if (mag > scan.max_abs) scan.max_abs = mag;
    scan.records.push_back({q, s.label, v});
  }
  return scan;
}

CHSHBound chsh_bound(const FieldConfig& config) {
  CHSHBound out;
  out.quadruples = chsh_quadruples(config).size();
  for (const auto& s : two_particle_states(config)) {
    if (!s.physical) continue;
    ++out.states_scanned;
    const auto m = chsh_scan(s).max_abs;
    auto& part = s.kind == StateKind::product ? out.product_bound : out.entangled_bound;
    if (m > part) part = m;
    if (out.witness.empty() || m > out.bound) {
      out.bound = m;
      out.witness = s.label;
    }
  }
  for (const auto* n : names_for(config)) {
    const auto s = classify(make(config, *n));
    if (s.kind != StateKind::entangled || !s.physical) continue;
    if (config.degree() == 1 && std::string(n->name) != "S") continue;
    const auto m = chsh_scan(s).max_abs;
    if (m > out.representative_bound) out.representative_bound = m;
  }
  return out;
}

}  // namespace bqm
