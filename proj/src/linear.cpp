#include "bqm/linear.hpp"

#include <sstream>

namespace bqm {

namespace {

void require_config(const FieldConfig& a, const FieldConfig& b) {
  if (!(a == b)) throw InvalidArgument("mixed field configurations: " + a.name() + " and " + b.name());
}

void require_components(const FieldConfig& config, const std::vector<FieldElement>& components) {
  if (components.empty()) throw InvalidArgument("vectors need at least one component");
  for (const auto& c : components) require_config(config, c.config());
}

void require_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw InvalidArgument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<FieldElement> from_pairs(const FieldConfig& config,
                                     std::initializer_list<std::pair<std::int64_t, std::int64_t>> pairs) {
  std::vector<FieldElement> out;
  out.reserve(pairs.size());
  for (const auto& [re, im] : pairs) out.emplace_back(config, re, im);
  return out;
}

template <class V>
std::string join(const V& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += to_string(v[k]);
  }
  return s + "]";
}

std::vector<std::string> split_entries(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '[' || c == ']') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

StateVector::StateVector(const FieldConfig& config, std::vector<FieldElement> components)
    : config_(config), components_(std::move(components)) {
  require_components(config_, components_);
}

StateVector::StateVector(const FieldConfig& config,
                         std::initializer_list<std::pair<std::int64_t, std::int64_t>> components)
    : StateVector(config, from_pairs(config, components)) {}

bool StateVector::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

StateVector StateVector::scaled(const FieldElement& s) const {
  require_config(config_, s.config());
  std::vector<FieldElement> out;
  out.reserve(size());
  for (const auto& c : components_) out.push_back(c * s);
  return {config_, std::move(out)};
}

DualVector::DualVector(const FieldConfig& config, std::vector<FieldElement> components)
    : config_(config), components_(std::move(components)) {
  require_components(config_, components_);
}

Matrix::Matrix(const FieldConfig& config, std::size_t rows, std::size_t cols)
    : config_(config), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(config)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

Matrix::Matrix(const FieldConfig& config,
               std::initializer_list<std::initializer_list<std::pair<std::int64_t, std::int64_t>>> rows)
    : config_(config), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw InvalidArgument("matrix dimensions must be positive");
  for (const auto& row : rows) {
    require_size(row.size(), cols_);
    for (const auto& [re, im] : row) data_.emplace_back(config, re, im);
  }
}

Matrix Matrix::identity(const FieldConfig& config, std::size_t n) {
  Matrix m(config, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = FieldElement::one(config);
  return m;
}

Matrix Matrix::outer(const StateVector& v, const DualVector& d) {
  require_config(v.config(), d.config());
  Matrix m(v.config(), v.size(), d.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < d.size(); ++c) m(r, c) = v[r] * d[c];
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_config(a.config_, b.config_);
  require_size(a.rows_, b.rows_);
  require_size(a.cols_, b.cols_);
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.negated(); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_config(a.config_, b.config_);
  require_size(a.cols_, b.rows_);
  Matrix m(a.config_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

StateVector operator*(const Matrix& m, const StateVector& v) {
  require_config(m.config_, v.config());
  require_size(m.cols_, v.size());
  std::vector<FieldElement> out(m.rows_, FieldElement::zero(m.config_));
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) out[r] += m(r, c) * v[c];
  return {m.config_, std::move(out)};
}

DualVector operator*(const DualVector& d, const Matrix& m) {
  require_config(m.config_, d.config());
  require_size(d.size(), m.rows_);
  std::vector<FieldElement> out(m.cols_, FieldElement::zero(m.config_));
  for (std::size_t c = 0; c < m.cols_; ++c)
    for (std::size_t r = 0; r < m.rows_; ++r) out[c] += d[r] * m(r, c);
  return {m.config_, std::move(out)};
}

Matrix Matrix::scaled(const FieldElement& s) const {
  require_config(config_, s.config());
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::negated() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(config_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::dagger() const {
  Matrix m = transpose();
  for (auto& x : m.data_) x = frobenius(x);
  return m;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(config_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw InvalidArgument("matrix is singular");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const auto s = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= s;
      inv(col, c) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const auto f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_config(a.config(), b.config());
  Matrix m(a.config(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
    for (std::size_t c1 = 0; c1 < a.cols(); ++c1)
      for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < b.cols(); ++c2)
          m(r1 * b.rows() + r2, c1 * b.cols() + c2) = a(r1, c1) * b(r2, c2);
  return m;
}

StateVector parse_vector(const FieldConfig& config, const std::string& text) {
  std::vector<FieldElement> out;
  for (const auto& e : split_entries(text)) out.push_back(parse_element(config, e));
  if (out.empty()) throw InvalidArgument("empty vector '" + text + "'");
  return {config, std::move(out)};
}

Matrix parse_matrix(const FieldConfig& config, const std::string& text) {
  std::vector<std::vector<FieldElement>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line, ';')) {
    std::vector<FieldElement> row;
    for (const auto& e : split_entries(line)) row.push_back(parse_element(config, e));
    if (row.empty()) throw InvalidArgument("empty matrix row in '" + text + "'");
    if (!rows.empty() && row.size() != rows.front().size())
      throw InvalidArgument("ragged matrix '" + text + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidArgument("empty matrix");
  Matrix m(config, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::string to_string(const StateVector& v) { return join(v); }
std::string to_string(const DualVector& d) { return join(d); }

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ' ';
      s += to_string(m(r, c));
    }
  }
  return s + "]";
}

FieldElement dot(const StateVector& a, const StateVector& b) {
  require_config(a.config(), b.config());
  require_size(a.size(), b.size());
  auto sum = FieldElement::zero(a.config());
  for (std::size_t k = 0; k < a.size(); ++k) sum += frobenius(a[k]) * b[k];
  return sum;
}

FieldElement pairing(const DualVector& d, const StateVector& v) {
  require_config(d.config(), v.config());
  require_size(d.size(), v.size());
  auto sum = FieldElement::zero(d.config());
  for (std::size_t k = 0; k < d.size(); ++k) sum += d[k] * v[k];
  return sum;
}

DualVector conjugate_dual(const StateVector& v) {
  const auto n = dot(v, v);
  if (n.is_zero()) throw InvalidArgument("no conjugate dual exists for self-orthogonal " + to_string(v));
  const auto s = n.inverse();
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (const auto& c : v.components()) out.push_back(frobenius(c) * s);
  return {v.config(), std::move(out)};
}

bool is_self_orthogonal(const StateVector& v) {
  if (v.is_zero()) throw InvalidArgument("self-orthogonality is undefined for the zero vector");
  return dot(v, v).is_zero();
}

std::size_t rank(const std::vector<StateVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& v : vectors) {
    require_config(vectors.front().config(), v.config());
    require_size(vectors.front().size(), v.size());
    rows.push_back(v.components());
  }
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto s = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= s;
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const auto f = rows[k][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  require_config(a.config(), b.config());
  std::vector<FieldElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.components())
    for (const auto& y : b.components()) out.push_back(x * y);
  return {a.config(), std::move(out)};
}

std::size_t ProjectiveState::pivot() const {
  for (std::size_t k = 0; k < rep_.size(); ++k)
    if (!rep_[k].is_zero()) return k;
  throw InvariantViolation("projective state with zero representative");
}

bool operator<(const ProjectiveState& a, const ProjectiveState& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto pa = a.pivot();
  const auto pb = b.pivot();
  if (pa != pb) return pa < pb;
  return a.rep().components() < b.rep().components();
}

ProjectiveState canonicalize(const StateVector& v) {
  if (v.is_zero()) throw InvalidArgument("the zero vector has no projective class");
  std::size_t k = 0;
  while (v[k].is_zero()) ++k;
  auto rep = v.scaled(v[k].inverse());
  const bool so = dot(rep, rep).is_zero();
  return {std::move(rep), so};
}

std::vector<ProjectiveState> enumerate_projective(const FieldConfig& config, std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be positive");
  const std::uint64_t q = config.order();
  double raw = 1;
  for (std::size_t k = 0; k < n; ++k) raw *= static_cast<double>(q);
  if (raw > 1e8) throw InvalidArgument("projective space too large to enumerate");

  std::vector<ProjectiveState> out;
  std::vector<FieldElement> comp(n, FieldElement::zero(config));
  for (std::size_t piv = 0; piv < n; ++piv) {
    const std::size_t tail = n - 1 - piv;
    std::uint64_t block = 1;
    for (std::size_t k = 0; k < tail; ++k) block *= q;
    for (std::uint64_t code = 0; code < block; ++code) {
      std::fill(comp.begin(), comp.end(), FieldElement::zero(config));
      comp[piv] = FieldElement::one(config);
      std::uint64_t rest = code;
      for (std::size_t k = n; k-- > piv + 1;) {
        comp[k] = FieldElement::from_index(config, rest % q);
        rest /= q;
      }
      out.push_back(canonicalize(StateVector(config, comp)));
    }
  }
  return out;
}

std::size_t projective_index(const ProjectiveState& s) {
  const std::uint64_t q = s.rep().config().order();
  const std::size_t n = s.size();
  const std::size_t piv = s.pivot();
  std::uint64_t index = 0;
  std::uint64_t block = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) block *= q;
  for (std::size_t k = 0; k < piv; ++k) {
    index += block;
    block /= q;
  }
  std::uint64_t code = 0;
  for (std::size_t k = piv + 1; k < n; ++k) code = code * q + s.rep()[k].index();
  return static_cast<std::size_t>(index + code);
}

}  // namespace bqm
