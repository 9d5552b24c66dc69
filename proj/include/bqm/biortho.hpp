#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bqm/gf.hpp"
#include "bqm/linear.hpp"

namespace bqm {

/// Kets with their conjugate duals, <r|s> = delta_rs.
struct BiorthogonalSystem {
  std::vector<StateVector> kets;
  std::vector<DualVector> bras;
};

/// True iff the kets are mutually orthogonal and none is self-orthogonal.
/// Throws InvalidArgument unless the list is a basis.
bool is_ortho_nondegenerate(const std::vector<StateVector>& basis);

/// Attaches conjugate duals. Throws unless the kets are ortho-nondegenerate.
BiorthogonalSystem make_system(const std::vector<StateVector>& kets);

/// Every biorthogonal system of V(2, q) up to ordering and phases. Kets are
/// canonical representatives; within a system the earlier state in
/// enumeration order comes first, and systems are sorted by their kets.
std::vector<BiorthogonalSystem> enumerate_biorthogonal_systems(const FieldConfig& config,
                                                               std::size_t n = 2);

struct SpectralTerm {
  FieldElement eigenvalue;
  std::size_t ket;
};

struct Observable {
  Matrix matrix;
  std::vector<SpectralTerm> spectral;
  BiorthogonalSystem system;
  std::string label;
};

/// A = sum_k alpha_k |k><k|. Eigenvalues must lie in GF(p).
Observable build_observable(const BiorthogonalSystem& system, const std::vector<FieldElement>& eigenvalues,
                            std::string label = {});

/// Recovers the eigenvalue attached to every ket of the system. Throws
/// InvalidArgument if some ket is not an eigenvector.
std::vector<SpectralTerm> spectral_decompose(const Matrix& m, const BiorthogonalSystem& system);

/// sigma_1, sigma_2 or sigma_3. sigma_2 needs degree 2.
Matrix pauli(const FieldConfig& config, int axis);

/// Axes available over the field: {1, 3} for degree 1, {1, 2, 3} for degree 2.
std::vector<int> spin_axes(const FieldConfig& config);

/// One observable per system of V(2, q), eigenvalue +1 on the first ket and
/// -1 on the second. Observables equal to a Pauli matrix are labeled
/// "sigma1".."sigma3" and sorted first; the rest are "O<k>" with k the
/// 1-based system index.
std::vector<Observable> spin_observables(const FieldConfig& config);

/// <psi|A|psi> with <psi| the conjugate dual. Throws InvalidArgument for a
/// self-orthogonal state or when the result is not in GF(p), which means A
/// is not a valid observable.
FieldElement bracket(const StateVector& state, const Matrix& a);
inline FieldElement bracket(const ProjectiveState& s, const Observable& a) { return bracket(s.rep(), a.matrix); }

struct Measurement {
  Rational expectation;
  Rational variance;
  /// Set when the variance came out negative. Not clamped.
  bool negative_variance = false;
};

Measurement expectation(const StateVector& state, const Matrix& a, const PhiMap& phi);
Measurement expectation(const ProjectiveState& state, const Observable& a);

/// Conventional letters for the states of V(2, 3) and V(2, 9) ("a".."j");
/// otherwise the rendered representative.
std::string state_label(const ProjectiveState& s);

struct TableCell {
  Rational expectation;
  Rational variance;
  /// sqrt(variance) when the variance is a perfect square, else empty.
  std::optional<Rational> delta;
};

struct TableRow {
  std::string state;
  std::vector<TableCell> cells;
};

struct ExpectationTable {
  std::string field;
  std::vector<std::string> observables;
  std::vector<TableRow> rows;
};

/// E and Delta for every physical state of V(2, q) that appears in a system
/// (system order, kets in system order) against every spin observable.
ExpectationTable table_report(const FieldConfig& config);

/// Checks that every physical state of V(2, q) is a ket of some system.
bool physical_states_covered(const FieldConfig& config);

}  // namespace bqm
