#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bqm/gf.hpp"

namespace bqm {

/// Where a property is checked: every case when exhaustive, otherwise
/// `samples` cases drawn from a generator seeded with `seed`.
struct PropertyDomain {
  FieldConfig config;
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct PropertyResult {
  std::string name;
  std::string field;
  bool exhaustive = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing case.
  std::string counterexample;

  bool passed() const { return cases > 0 && failures == 0; }
};

/// "sesquilinearity", "conjugate-symmetry", "frobenius-involution",
/// "phase-invariance", "eigenstate-zero-variance", "product-factorization",
/// "chsh-sign-identities".
const std::vector<std::string>& property_names();

/// Throws InvalidArgument for an unknown name.
PropertyResult check_property(const std::string& name, const PropertyDomain& domain);

std::vector<PropertyResult> run_property_suite(const PropertyDomain& domain);

/// GF(3) and GF(9) exhaustively; GF(7), GF(49), GF(11), GF(121) randomized.
std::vector<PropertyDomain> standard_domains(std::size_t samples = 400, std::uint64_t seed = 1729);

}  // namespace bqm
