#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bqm/gf.hpp"

namespace bqm {

/// Column vector in V(N, q).
class StateVector {
 public:
  StateVector(const FieldConfig& config, std::vector<FieldElement> components);
  /// Convenience for small literals: each pair is (re, im).
  StateVector(const FieldConfig& config,
              std::initializer_list<std::pair<std::int64_t, std::int64_t>> components);

  const FieldConfig& config() const { return config_; }
  std::size_t size() const { return components_.size(); }
  const FieldElement& operator[](std::size_t k) const { return components_[k]; }
  const std::vector<FieldElement>& components() const { return components_; }

  bool is_zero() const;
  StateVector scaled(const FieldElement& s) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  FieldConfig config_;
  std::vector<FieldElement> components_;
};

/// Row vector in the dual space. Pairs with a StateVector by plain
/// contraction; any conjugation has already been applied.
class DualVector {
 public:
  DualVector(const FieldConfig& config, std::vector<FieldElement> components);

  const FieldConfig& config() const { return config_; }
  std::size_t size() const { return components_.size(); }
  const FieldElement& operator[](std::size_t k) const { return components_[k]; }
  const std::vector<FieldElement>& components() const { return components_; }

  friend bool operator==(const DualVector&, const DualVector&) = default;

 private:
  FieldConfig config_;
  std::vector<FieldElement> components_;
};

/// Dense rows x cols matrix over the field.
class Matrix {
 public:
  Matrix(const FieldConfig& config, std::size_t rows, std::size_t cols);
  Matrix(const FieldConfig& config,
         std::initializer_list<std::initializer_list<std::pair<std::int64_t, std::int64_t>>> rows);

  static Matrix identity(const FieldConfig& config, std::size_t n);
  /// |v><d|
  static Matrix outer(const StateVector& v, const DualVector& d);

  const FieldConfig& config() const { return config_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend StateVector operator*(const Matrix& m, const StateVector& v);
  friend DualVector operator*(const DualVector& d, const Matrix& m);
  Matrix scaled(const FieldElement& s) const;
  Matrix negated() const;

  /// Conjugate transpose: transpose followed by Frobenius on every entry.
  Matrix dagger() const;
  Matrix transpose() const;
  /// Inverse of a square matrix by Gauss-Jordan elimination.
  Matrix inverse() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldConfig config_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// "1 0 1+i 1" or "1,0,1+i,1" -> StateVector.
StateVector parse_vector(const FieldConfig& config, const std::string& text);
/// Rows separated by ';', entries by spaces or commas: "0 -i; i 0".
Matrix parse_matrix(const FieldConfig& config, const std::string& text);
std::string to_string(const StateVector& v);
std::string to_string(const DualVector& d);
std::string to_string(const Matrix& m);

/// Sesquilinear dot product sum_k frobenius(a_k) * b_k.
FieldElement dot(const StateVector& a, const StateVector& b);

/// Plain contraction sum_k d_k * v_k.
FieldElement pairing(const DualVector& d, const StateVector& v);

/// <v| = frobenius(v)^T / (v . v). Throws InvalidArgument when v is
/// self-orthogonal, since no conjugate dual exists.
DualVector conjugate_dual(const StateVector& v);

/// True iff v . v = 0. Throws for the zero vector.
bool is_self_orthogonal(const StateVector& v);

/// Rank of a list of vectors over the field.
std::size_t rank(const std::vector<StateVector>& vectors);

/// Kronecker product; component (i, j) lands at i * b.size() + j.
StateVector tensor(const StateVector& a, const StateVector& b);

/// A point of the projective space: the phase class of a nonzero vector,
/// represented by the member whose first nonzero component is 1.
class ProjectiveState {
 public:
  const StateVector& rep() const { return rep_; }
  bool self_orthogonal() const { return self_orthogonal_; }
  bool physical() const { return !self_orthogonal_; }
  std::size_t size() const { return rep_.size(); }
  /// Position of the leading 1.
  std::size_t pivot() const;

  friend bool operator==(const ProjectiveState& a, const ProjectiveState& b) { return a.rep_ == b.rep_; }
  /// Enumeration order: by pivot position, then lexicographically on the
  /// components after it.
  friend bool operator<(const ProjectiveState& a, const ProjectiveState& b);

 private:
  friend ProjectiveState canonicalize(const StateVector& v);
  ProjectiveState(StateVector rep, bool self_orthogonal)
      : rep_(std::move(rep)), self_orthogonal_(self_orthogonal) {}

  StateVector rep_;
  bool self_orthogonal_;
};

/// Divides v by its first nonzero component. Throws for the zero vector.
ProjectiveState canonicalize(const StateVector& v);

/// Every point of PG(N-1, q) in enumeration order. The count is
/// (q^N - 1) / (q - 1). Refuses spaces with more than 1e8 raw vectors.
std::vector<ProjectiveState> enumerate_projective(const FieldConfig& config, std::size_t n);

/// Dense index of a canonical state inside enumerate_projective's output.
/// Lets callers key lookup tables without hashing.
std::size_t projective_index(const ProjectiveState& s);

}  // namespace bqm
