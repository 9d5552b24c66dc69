#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bqm/entangle.hpp"
#include "bqm/lp.hpp"

namespace bqm {

struct LinearEquation {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::string name;
};

/// Linear constraints on outcome probabilities. Nonnegativity and
/// normalization are always imposed on top of the listed equations.
struct ConstraintSystem {
  std::vector<std::string> outcomes;
  std::vector<LinearEquation> equations;
};

/// Listed equations followed by the normalization row.
std::vector<LinearEquation> with_normalization(const ConstraintSystem& s);

/// Multipliers y for the equality rows, normalization last. Summing
/// y_r * row_r gives coefficients >= 0 and a negative right-hand side,
/// which no probability vector can satisfy.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
  std::vector<Rational> combined_coefficients;
  Rational combined_rhs;
};

/// Recomputes the combination from the multipliers and checks the sign pattern.
bool verify_certificate(const ConstraintSystem& s, const FarkasCertificate& c);

enum class InferenceStatus { unique, indeterminate, infeasible };

std::string to_string(InferenceStatus s);

struct PinnedValue {
  std::size_t outcome;
  Rational value;
};

struct InferenceResult {
  InferenceStatus status = InferenceStatus::infeasible;
  /// The point when unique; a feasible vertex when indeterminate.
  std::vector<Rational> solution;
  /// Basis of the directions along which solutions may move.
  RationalMatrix directions;
  /// Nonzero rows of the reduced echelon form of [A | b], normalization included.
  std::vector<LinearEquation> derived_identities;
  /// Per-outcome [min, max] over the feasible set. Empty when infeasible.
  std::vector<std::pair<Rational, Rational>> ranges;
  /// Outcomes whose value is forced by nonnegativity.
  std::vector<PinnedValue> pinned;
  std::optional<FarkasCertificate> certificate;
};

InferenceResult infer_probabilities(const ConstraintSystem& s);

/// True iff the identity is a linear consequence of the system's equations
/// plus normalization. Consequences that need nonnegativity are not
/// detected; use functional_range for those.
bool implies(const ConstraintSystem& s, const LinearEquation& identity);

/// [min, max] of sum_k c_k P_k over every consistent distribution. Throws
/// InvalidArgument when the system is infeasible.
std::pair<Rational, Rational> functional_range(const ConstraintSystem& s, const std::vector<Rational>& c);

/// Outcomes {+1, -1} with E = expectation.
ConstraintSystem single_spin_system(const Rational& expectation);

/// Outcomes {++, +-, -+, --} of sigma_i (x) sigma_j with the product
/// correlator, plus the single-spin expectations when given.
ConstraintSystem spin_product_system(const Rational& correlator, const std::optional<Rational>& side1 = {},
                                     const std::optional<Rational>& side2 = {});

/// spin_product_system filled from a state's correlator (and marginals).
ConstraintSystem spin_product_system(const TwoParticleState& s, int i, int j, bool marginals);

struct MomentReport {
  std::size_t unknowns = 0;
  std::size_t max_power = 0;
  std::size_t rank = 0;
  std::size_t indeterminacy = 0;
  bool unique() const { return indeterminacy == 0; }
};

/// Rows sum_k v_k^n P_k for n = 0..max_power over the outcome values v_k.
MomentReport moment_system(const std::vector<Rational>& outcome_values, std::size_t max_power);

struct CorrelatorConstraint {
  int axis1;
  int axis2;
  Rational value;
};

struct SingleSpinConstraint {
  int side;
  int axis;
  Rational value;
};

struct HVResult {
  bool feasible = false;
  std::vector<int> axes;
  /// "(X1,Z1;X2,Z2)" style labels, e.g. "(+,+;-,-)".
  std::vector<std::string> configurations;
  /// assignments[c] holds the side-1 values, then the side-2 values, in axis order.
  std::vector<std::vector<int>> assignments;
  ConstraintSystem system;
  /// Probability per configuration when feasible.
  std::vector<Rational> witness;
  std::optional<FarkasCertificate> certificate;
};

/// Deterministic assignments of +-1 to every axis on both sides. Axes are
/// {1, 3} for axes_per_side = 2 and {1, 2, 3} for 3.
HVResult hv_feasibility(const std::vector<CorrelatorConstraint>& correlators,
                        const std::vector<SingleSpinConstraint>& single_spins, int axes_per_side);

/// Correlator (and optionally single-spin) constraints of a Galois state on
/// the given axes.
std::vector<CorrelatorConstraint> correlator_constraints(const TwoParticleState& s, const std::vector<int>& axes);
std::vector<SingleSpinConstraint> single_spin_constraints(const TwoParticleState& s, const std::vector<int>& axes);

/// Sum over configurations of witness * product of the assigned values.
Rational witness_correlator(const HVResult& r, int axis1, int axis2);
Rational witness_single_spin(const HVResult& r, int side, int axis);

struct GaussianRational {
  Rational re;
  Rational im;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational conj() const { return {re, -im}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Unnormalized amplitudes of the canonical states "S", "T", "U".
std::vector<GaussianRational> canonical_state(const std::string& label);

/// <v| sigma_i (x) sigma_j |v> / <v|v> with complex Pauli matrices. Throws
/// InvariantViolation if the imaginary part is nonzero.
Rational canonical_correlator(const std::string& label, int i, int j);

struct CorrespondenceEntry {
  std::string state;
  int i;
  int j;
  FieldElement galois;
  Rational canonical;
  bool holds;
};

struct CorrespondenceReport {
  std::vector<CorrespondenceEntry> entries;
  bool all_hold = false;
};

/// Over GF(9): for S, phi(Galois) equals the canonical value; for T and U,
/// -1 <-> 1/2, +1 <-> -1/2, 0 <-> 0. All nine axis pairs.
CorrespondenceReport correspondence_check();

struct Table4Row {
  std::string state;
  /// P(++), P(+-), P(-+), P(--) for sigma_3 (x) sigma_3.
  std::vector<Rational> probabilities;
  Rational expectation;
};

std::vector<Table4Row> table4_report();

}  // namespace bqm
