#pragma once

#include <vector>

#include "bqm/gf.hpp"

namespace bqm {

using RationalMatrix = std::vector<std::vector<Rational>>;

enum class LPStatus { optimal, infeasible, unbounded };

enum class Sense { minimize, maximize };

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  std::vector<Rational> x;
  Rational objective;
  /// When infeasible: y with A^T y >= 0 and b^T y < 0.
  std::vector<Rational> farkas;
};

/// Optimizes c.x subject to A x = b, x >= 0 by the two-phase simplex method
/// with Bland's rule in exact rational arithmetic. An empty c only checks
/// feasibility.
LPResult solve_lp(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c,
                  Sense sense = Sense::minimize);

/// True iff y is a Farkas certificate for A x = b, x >= 0.
bool is_farkas_certificate(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of {x : A x = 0}.
RationalMatrix null_space(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& m);

}  // namespace bqm
