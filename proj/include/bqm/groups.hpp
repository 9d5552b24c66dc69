#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bqm/biortho.hpp"
#include "bqm/entangle.hpp"

namespace bqm {

/// A finite group given by its multiplication table: mul[a][b] = a * b.
struct FiniteGroup {
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;

  std::size_t order() const { return mul.size(); }
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::size_t inverse_of(const FiniteGroup& g, std::size_t x);
std::size_t element_order(const FiniteGroup& g, std::size_t x);
bool is_abelian(const FiniteGroup& g);
/// Closure of the given elements under multiplication, sorted.
std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens);
/// Classes sorted by size, then by smallest member; members sorted.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

struct IsomorphismReport {
  std::string target;
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  bool order_ok = false;
  bool class_equation_ok = false;
  /// Defining relations hold for generators that generate the whole group.
  bool relations_ok = false;
  std::vector<std::size_t> generators;

  bool passed() const { return order_ok && class_equation_ok && relations_ok; }
};

/// D_n = <r, s | r^n = s^2 = (sr)^2 = e> with |G| = 2n.
IsomorphismReport check_dihedral(const FiniteGroup& g, std::size_t n);
/// S4 = <a, b | a^2 = b^3 = (ab)^4 = e> with |G| = 24 and class
/// equation 1 + 3 + 6 + 6 + 8.
IsomorphismReport check_s4(const FiniteGroup& g);

/// 2x2 matrix M with M^dagger M = c * 1, modulo nonzero scalars. On GF(p)
/// the dagger is the plain transpose.
struct GroupElement {
  /// Canonical: first nonzero entry is 1.
  Matrix matrix;
  /// c in M^dagger M = c * 1 for the canonical matrix.
  FieldElement similitude;
  /// Cycle notation on the physical single-particle states; "e" for the identity.
  std::string label;
  /// perm[k] is the index of the image of point k.
  std::vector<std::size_t> perm;
};

struct ProjectiveGroup {
  FieldConfig config;
  /// Physical states of V(2, q) in system order (a, b, c, d, ...).
  std::vector<ProjectiveState> points;
  std::vector<std::string> point_labels;
  /// Identity first, then canonical matrices in enumeration order.
  std::vector<GroupElement> elements;
  FiniteGroup table;

  std::size_t order() const { return elements.size(); }
  /// Index of the element with the given label, or of the canonical form
  /// of the given matrix. Throws InvalidArgument if absent.
  std::size_t find(const std::string& label) const;
  std::size_t find(const Matrix& m) const;
};

/// PO(2, p) for degree 1, PU(2, p^2) for degree 2.
ProjectiveGroup enumerate_group(const FieldConfig& config);

/// The subgroup consisting of the identity only.
ProjectiveGroup trivial_group(const FieldConfig& config);

/// D4 over GF(3), S4 over GF(9), D_{p+1} for other degree-1 fields.
/// Other degree-2 fields are only checked for the order p(p^2 - 1) of
/// PGL(2, p), with relations_ok left false.
IsomorphismReport verify_isomorphism(const ProjectiveGroup& g);

struct SignedAxis {
  int axis;
  int sign;
};

/// g sigma_axis g^-1 as +-sigma_k, or empty when it is not a signed Pauli
/// matrix (possible for p > 3).
std::optional<SignedAxis> conjugate_observable(const ProjectiveGroup& g, std::size_t element, int axis);

enum class ActionMode { single, global, local_1, local_2 };

std::string to_string(ActionMode m);
ActionMode parse_action_mode(const std::string& s);

/// single: g on V(2, q); global: g (x) g; local_1: g (x) 1; local_2: 1 (x) g.
ProjectiveState act(const ProjectiveGroup& g, std::size_t element, const ProjectiveState& s, ActionMode mode);

enum class OrbitMode { global, local };

std::string to_string(OrbitMode m);
OrbitMode parse_orbit_mode(const std::string& s);

struct Orbit {
  std::vector<ProjectiveState> members;
  ProjectiveState representative;
  /// Label of a named member when one exists (S, T, U, ...), else of the representative.
  std::string label;
  std::size_t stabilizer_order = 0;
};

struct OrbitReport {
  OrbitMode mode;
  /// |G| for global, |G|^2 for local.
  std::size_t acting_order = 0;
  std::size_t states = 0;
  std::vector<Orbit> orbits;
  std::size_t burnside_count = 0;
};

/// Orbit partition of `states` (which must be closed under the action).
/// Orbits are listed in order of their first member.
std::vector<Orbit> orbits(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode);

/// (1/|G|) sum_g |Fix(g)|, counting g over the acting group.
std::size_t burnside_count(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode);

OrbitReport orbit_report(const ProjectiveGroup& g, const std::vector<ProjectiveState>& states, OrbitMode mode);

/// The physical entangled states of V(4, q) in enumeration order.
std::vector<ProjectiveState> physical_entangled_states(const FieldConfig& config);

struct LocalTransform {
  std::size_t side1;
  std::size_t side2;
  ProjectiveState representative;
  std::string representative_label;
};

/// (g1 (x) g2) |state> = |representative>, where the representative is S
/// over GF(3), one of S, T, U over GF(9), and the first orbit member in
/// enumeration order otherwise. Prefers transforms acting on side 1 only.
LocalTransform find_local_transform(const ProjectiveGroup& g, const ProjectiveState& state);

/// A reference label that does not agree with the computed group.
struct LabelDiscrepancy {
  std::string where;
  std::string printed;
  std::string computed;
};

struct ReferenceComparison {
  std::size_t matrices_checked = 0;
  std::size_t matrices_matched = 0;
  std::size_t transform_rows_checked = 0;
  std::size_t transform_rows_matched = 0;
  std::size_t class_labels_checked = 0;
  std::size_t class_labels_matched = 0;
  /// Every reference class equals a computed class once discrepancies are resolved.
  bool classes_match = false;
  std::vector<LabelDiscrepancy> discrepancies;
};

/// Compares the group over GF(3) or GF(9) with the reference element list,
/// observable transformation table, and class list. Typos are matched to
/// computed labels by action (table rows) or by closest spelling inside
/// the same class, and listed as discrepancies. Throws for other fields.
ReferenceComparison compare_with_reference(const ProjectiveGroup& g);

}  // namespace bqm
