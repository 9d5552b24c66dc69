#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bqm/error.hpp"

namespace bqm {

/// Exact rational number. Every expectation value, probability and
/// correlator in the library is one of these; nothing is floating point.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

/// Parameters of GF(p) (degree 1) or GF(p^2) = GF(p)[i] (degree 2).
/// Only primes p = 3 mod 4 are accepted, so x^2 + 1 is irreducible and
/// i behaves like the imaginary unit.
class FieldConfig {
 public:
  static constexpr std::uint32_t kMaxPrime = 46337;

  FieldConfig(std::uint32_t p, unsigned degree);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return degree_; }
  /// Number of field elements q = p^degree.
  std::uint64_t order() const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

  /// "GF(3)", "GF(9)", ...
  std::string name() const;

 private:
  std::uint32_t p_;
  unsigned degree_;
};

bool is_prime(std::uint64_t n);

/// re + i*im with both parts canonical residues in [0, p).
class FieldElement {
 public:
  /// Reduces arbitrary signed integers into canonical residues.
  FieldElement(const FieldConfig& config, std::int64_t re, std::int64_t im = 0);

  static FieldElement zero(const FieldConfig& c) { return {c, 0, 0}; }
  static FieldElement one(const FieldConfig& c) { return {c, 1, 0}; }
  /// The square root of -1. Requires degree 2.
  static FieldElement imaginary_unit(const FieldConfig& c);

  /// Element with index k in [0, q): re = k mod p, im = k / p.
  static FieldElement from_index(const FieldConfig& c, std::uint64_t k);
  std::uint64_t index() const { return re_ + std::uint64_t{config_.p()} * im_; }

  std::uint32_t re() const { return re_; }
  std::uint32_t im() const { return im_; }
  const FieldConfig& config() const { return config_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  /// True when the element lies in the GF(p) subfield.
  bool is_real() const { return im_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.config_ == b.config_ && a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Orders by (im, re) so the GF(p) subfield sorts first.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    if (auto c = a.im_ <=> b.im_; c != 0) return c;
    return a.re_ <=> b.re_;
  }

 private:
  FieldConfig config_;
  std::uint32_t re_;
  std::uint32_t im_;
};

enum class FieldOp { add, sub, mul, div, neg, inv };

/// Dispatching form of the arithmetic operators. neg and inv ignore b.
FieldElement field_op(const FieldElement& a, const FieldElement& b, FieldOp op);

/// a^p: the identity on GF(p), re + i*im -> re - i*im on GF(p^2).
FieldElement frobenius(const FieldElement& a);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldElement& a);

/// Smallest residue generating GF(p)^x. Degree-1 configs only.
FieldElement find_generator(const FieldConfig& config);

/// Signed-residue rendering: p-1 prints as "-1"; GF(p^2) prints as "a+bi".
std::string to_string(const FieldElement& a);

/// Inverse of to_string. Accepts "0", "-1", "i", "-i", "2i", "1+i", "-1-2i".
FieldElement parse_element(const FieldConfig& config, const std::string& text);

/// The product-preserving map GF(p) -> {-1, 0, +1}: 0 for zero, +1 for even
/// powers of a generator, -1 for odd powers. Built once per field as a
/// lookup table.
class PhiMap {
 public:
  explicit PhiMap(const FieldConfig& config);
  /// Uses the supplied generator instead of the smallest one.
  PhiMap(const FieldConfig& config, const FieldElement& generator);

  /// Throws InvalidArgument for elements with nonzero imaginary part.
  int sign(const FieldElement& a) const;
  Rational operator()(const FieldElement& a) const { return sign(a); }

  const FieldElement& generator() const { return generator_; }

 private:
  FieldConfig config_;
  FieldElement generator_;
  std::vector<signed char> table_;
};

Rational phi_map(const FieldElement& a);

/// |k| = 0 for k = 0, 1 otherwise.
Rational abs_map(const FieldElement& a);

struct PhiUniquenessReport {
  std::uint32_t p = 0;
  std::string method;
  std::uint64_t candidates_examined = 0;
  std::uint64_t homomorphisms = 0;
  std::uint64_t qualifying = 0;
  bool unique = false;
  bool matches_phi = false;
  std::vector<std::uint32_t> kernel;
  bool kernel_is_even_powers = false;

  bool passed() const { return unique && matches_phi && kernel_is_even_powers; }
};

/// Enumerates multiplicative maps GF(p)^x -> {+1, -1} and keeps those that
/// are homomorphisms, surjective, and send 1 to +1. Small p are checked by
/// trying every sign assignment; larger p enumerate the two maps fixed by a
/// generator image and validate each against the full multiplication table.
/// Requires degree 1 and p <= 1000.
PhiUniquenessReport verify_phi_uniqueness(const FieldConfig& config);

}  // namespace bqm
