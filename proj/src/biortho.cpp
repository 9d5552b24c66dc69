#include "bqm/biortho.hpp"

#include <algorithm>
#include <map>

namespace bqm {

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  using boost::multiprecision::cpp_int;
  const cpp_int n = boost::multiprecision::numerator(r);
  const cpp_int d = boost::multiprecision::denominator(r);
  const cpp_int sn = boost::multiprecision::sqrt(n);
  const cpp_int sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

// The single projective point orthogonal to s in V(2, q).
StateVector orthogonal_complement(const StateVector& s) {
  return StateVector(s.config(), {-frobenius(s[1]), frobenius(s[0])});
}

}  // namespace

bool is_ortho_nondegenerate(const std::vector<StateVector>& basis) {
  if (basis.empty()) throw InvalidArgument("empty basis");
  if (basis.size() != basis.front().size() || rank(basis) != basis.size())
    throw InvalidArgument("vectors do not form a basis");
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const auto d = dot(basis[r], basis[s]);
      if ((r == s) == d.is_zero()) return false;
    }
  return true;
}

BiorthogonalSystem make_system(const std::vector<StateVector>& kets) {
  if (!is_ortho_nondegenerate(kets)) throw InvalidArgument("basis is not ortho-nondegenerate");
  BiorthogonalSystem sys{kets, {}};
  for (const auto& k : kets) sys.bras.push_back(conjugate_dual(k));
  return sys;
}

std::vector<BiorthogonalSystem> enumerate_biorthogonal_systems(const FieldConfig& config, std::size_t n) {
  if (n != 2) throw InvalidArgument("biorthogonal system enumeration supports N = 2 only");
  std::vector<BiorthogonalSystem> out;
  for (const auto& s : enumerate_projective(config, 2)) {
    if (!s.physical()) continue;
    const auto t = canonicalize(orthogonal_complement(s.rep()));
    if (t < s || !t.physical()) continue;
    out.push_back(make_system({s.rep(), t.rep()}));
  }
  return out;
}

Observable build_observable(const BiorthogonalSystem& system, const std::vector<FieldElement>& eigenvalues,
                            std::string label) {
  if (system.kets.empty() || eigenvalues.size() != system.kets.size())
    throw InvalidArgument("need one eigenvalue per ket");
  const auto& cfg = system.kets.front().config();
  Matrix m(cfg, system.kets.size(), system.kets.size());
  std::vector<SpectralTerm> spectral;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    if (!eigenvalues[k].is_real())
      throw InvalidArgument("eigenvalue " + to_string(eigenvalues[k]) + " is not in GF(p)");
    m = m + Matrix::outer(system.kets[k], system.bras[k]).scaled(eigenvalues[k]);
    spectral.push_back({eigenvalues[k], k});
  }
  return {std::move(m), std::move(spectral), system, std::move(label)};
}

std::vector<SpectralTerm> spectral_decompose(const Matrix& m, const BiorthogonalSystem& system) {
  std::vector<SpectralTerm> out;
  for (std::size_t k = 0; k < system.kets.size(); ++k) {
    const auto image = m * system.kets[k];
    const auto alpha = pairing(system.bras[k], image);
    if (!(image == system.kets[k].scaled(alpha)))
      throw InvalidArgument("ket " + to_string(system.kets[k]) + " is not an eigenvector");
    out.push_back({alpha, k});
  }
  return out;
}

Matrix pauli(const FieldConfig& config, int axis) {
  switch (axis) {
    case 1:
      return Matrix(config, {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
    case 2:
      if (config.degree() != 2) throw InvalidArgument("sigma_2 requires GF(p^2)");
      return Matrix(config, {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}});
    case 3:
      return Matrix(config, {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}});
    default:
      throw InvalidArgument("spin axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

std::vector<int> spin_axes(const FieldConfig& config) {
  return config.degree() == 2 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 3};
}

std::vector<Observable> spin_observables(const FieldConfig& config) {
  const auto systems = enumerate_biorthogonal_systems(config);
  const std::vector<FieldElement> ev{FieldElement::one(config), -FieldElement::one(config)};
  std::map<int, Observable> named;
  std::vector<Observable> rest;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    auto obs = build_observable(systems[k], ev);
    int axis = 0;
    for (int a : spin_axes(config))
      if (obs.matrix == pauli(config, a)) axis = a;
    if (axis) {
      obs.label = "sigma" + std::to_string(axis);
      named.emplace(axis, std::move(obs));
    } else {
      obs.label = "O" + std::to_string(k + 1);
      rest.push_back(std::move(obs));
    }
  }
  std::vector<Observable> out;
  for (auto& [axis, obs] : named) out.push_back(std::move(obs));
  for (auto& obs : rest) out.push_back(std::move(obs));
  return out;
}

FieldElement bracket(const StateVector& state, const Matrix& a) {
  const auto value = pairing(conjugate_dual(state), a * state);
  if (!value.is_real())
    throw InvalidArgument("bracket " + to_string(value) + " is not in GF(p); malformed observable");
  return value;
}

Measurement expectation(const StateVector& state, const Matrix& a, const PhiMap& phi) {
  Measurement m;
  m.expectation = phi(bracket(state, a));
  m.variance = phi(bracket(state, a * a)) - m.expectation * m.expectation;
  m.negative_variance = m.variance < 0;
  return m;
}

Measurement expectation(const ProjectiveState& state, const Observable& a) {
  return expectation(state.rep(), a.matrix, PhiMap(state.rep().config()));
}

std::string state_label(const ProjectiveState& s) {
  const auto& cfg = s.rep().config();
  if (s.size() == 2 && cfg.p() == 3) {
    struct Named {
      const char* name;
      std::int64_t re, im;
    };
    // Second component of [1, x]; "a" and "b" are the basis vectors.
    static const Named names[] = {{"c", 1, 0},  {"d", -1, 0}, {"e", 0, 1},  {"f", 0, -1},
                                  {"g", 1, 1},  {"h", 1, -1}, {"i", -1, 1}, {"j", -1, -1}};
    if (s.pivot() == 1) return "b";
    if (s.rep()[1].is_zero()) return "a";
    for (const auto& n : names) {
      if (n.im != 0 && cfg.degree() == 1) continue;
      if (s.rep()[1] == FieldElement(cfg, n.re, n.im)) return n.name;
    }
  }
  return to_string(s.rep());
}

ExpectationTable table_report(const FieldConfig& config) {
  const auto observables = spin_observables(config);
  const PhiMap phi(config);
  ExpectationTable table;
  table.field = config.name();
  for (const auto& o : observables) table.observables.push_back(o.label);
  for (const auto& sys : enumerate_biorthogonal_systems(config)) {
    for (const auto& ket : sys.kets) {
      TableRow row{state_label(canonicalize(ket)), {}};
      for (const auto& o : observables) {
        const auto m = expectation(ket, o.matrix, phi);
        row.cells.push_back({m.expectation, m.variance, exact_sqrt(m.variance)});
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

bool physical_states_covered(const FieldConfig& config) {
  const auto states = enumerate_projective(config, 2);
  std::vector<bool> seen(states.size(), false);
  for (const auto& sys : enumerate_biorthogonal_systems(config))
    for (const auto& k : sys.kets) seen[projective_index(canonicalize(k))] = true;
  for (const auto& s : states)
    if (s.physical() && !seen[projective_index(s)]) return false;
  return true;
}

}  // namespace bqm
