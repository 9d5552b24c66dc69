#pragma once

#include <array>
#include <string>
#include <vector>

#include "bqm/biortho.hpp"

namespace bqm {

enum class StateKind { product, entangled };

std::string to_string(StateKind k);

/// A projective state of V(4, q) = V(2, q) x V(2, q).
struct TwoParticleState {
  ProjectiveState state;
  StateKind kind;
  bool physical;
  std::string label;
};

/// Product iff the reshaped 2x2 matrix [[v0, v1], [v2, v3]] is singular.
TwoParticleState classify(const StateVector& v);

/// "S" over every field; "T" and "U" over GF(9); the eight labels
/// "(ab)", "(cd)", "(ab)(cd)", ... of the physical entangled states over
/// GF(3). Other states render as their representative.
std::string two_particle_label(const ProjectiveState& s);

/// Looks up a state by the labels above, or parses a 4-component vector.
TwoParticleState named_state(const FieldConfig& config, const std::string& name);

/// Every state of V(4, q) in enumeration order.
std::vector<TwoParticleState> two_particle_states(const FieldConfig& config);

struct Census {
  std::size_t inequivalent = 0;
  std::size_t product = 0;
  std::size_t product_physical = 0;
  std::size_t product_self_orthogonal = 0;
  std::size_t entangled = 0;
  std::size_t entangled_self_orthogonal = 0;
  std::size_t entangled_physical = 0;
};

Census census(const FieldConfig& config);

/// sigma_|i| (x) sigma_|j|, each factor negated when its axis is negative.
Matrix product_spin(const FieldConfig& config, int i, int j);

/// phi(<Psi| sigma_i (x) sigma_j |Psi>). Axes may be negative.
Rational correlator(const TwoParticleState& s, int i, int j);

/// phi(<Psi| sigma_axis (x) 1 |Psi>) for side 1, phi(<Psi| 1 (x) sigma_axis |Psi>)
/// for side 2.
Rational single_spin(const TwoParticleState& s, int side, int axis);

struct CHSHRecord {
  std::array<int, 4> axes;
  std::string state;
  Rational value;
};

/// E(AB) + E(Ab) + E(aB) - E(ab). Throws if |A| = |a| or |B| = |b|.
CHSHRecord chsh(const TwoParticleState& s, int A, int a, int B, int b);

/// Ordered (A, a, B, b) over spin_axes with A != a and B != b.
std::vector<std::array<int, 4>> chsh_quadruples(const FieldConfig& config);

struct CHSHScan {
  std::string state;
  /// histogram[v] counts quadruples with |C| = v.
  std::array<std::size_t, 5> histogram{};
  Rational max_abs;
  std::vector<CHSHRecord> records;
};

CHSHScan chsh_scan(const TwoParticleState& s);

struct CHSHBound {
  Rational bound;
  Rational product_bound;
  Rational entangled_bound;
  std::size_t states_scanned = 0;
  std::size_t quadruples = 0;
  /// First state in enumeration order attaining the bound.
  std::string witness;
  /// Max over the orbit representatives (S; or S, T, U over GF(9)).
  Rational representative_bound;
};

/// Scans every physical state of V(4, q), products included.
CHSHBound chsh_bound(const FieldConfig& config);

}  // namespace bqm
