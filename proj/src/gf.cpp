#include "bqm/gf.hpp"

#include <algorithm>
#include <sstream>

namespace bqm {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldConfig::FieldConfig(std::uint32_t p, unsigned degree) : p_(p), degree_(degree) {
  if (degree != 1 && degree != 2)
    throw InvalidArgument("field degree must be 1 or 2, got " + std::to_string(degree));
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (p % 4 != 3) throw InvalidArgument("p must be 3 mod 4, got " + std::to_string(p));
  if (p > kMaxPrime) throw InvalidArgument("p too large: " + std::to_string(p));
}

std::uint64_t FieldConfig::order() const {
  return degree_ == 1 ? std::uint64_t{p_} : std::uint64_t{p_} * p_;
}

std::string FieldConfig::name() const { return "GF(" + std::to_string(order()) + ")"; }

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.config() == b.config()))
    throw InvalidArgument("field elements from different fields: " + a.config().name() + " vs " +
                          b.config().name());
}

std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

}  // namespace

FieldElement::FieldElement(const FieldConfig& config, std::int64_t re, std::int64_t im)
    : config_(config), re_(reduce(re, config.p())), im_(reduce(im, config.p())) {
  if (config.degree() == 1 && im_ != 0)
    throw InvalidArgument("nonzero imaginary part in " + config.name());
}

FieldElement FieldElement::imaginary_unit(const FieldConfig& c) {
  if (c.degree() != 2) throw InvalidArgument("i is not an element of " + c.name());
  return {c, 0, 1};
}

FieldElement FieldElement::from_index(const FieldConfig& c, std::uint64_t k) {
  if (k >= c.order()) throw InvalidArgument("field element index out of range");
  return {c, static_cast<std::int64_t>(k % c.p()), static_cast<std::int64_t>(k / c.p())};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const auto p = a.config_.p();
  FieldElement r = a;
  r.re_ = (a.re_ + b.re_) % p;
  r.im_ = (a.im_ + b.im_) % p;
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const auto p = a.config_.p();
  FieldElement r = a;
  r.re_ = (a.re_ + p - b.re_) % p;
  r.im_ = (a.im_ + p - b.im_) % p;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const auto p = a.config_.p();
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i, with i^2 = -1.
  FieldElement r = a;
  r.re_ = (mulmod(a.re_, b.re_, p) + p - mulmod(a.im_, b.im_, p)) % p;
  r.im_ = (mulmod(a.re_, b.im_, p) + mulmod(a.im_, b.re_, p)) % p;
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::operator-() const { return zero(config_) - *this; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(config_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero in " + config_.name());
  const auto p = config_.p();
  // x^-1 = conj(x) / N(x), where the norm N(x) = re^2 + im^2 lies in GF(p).
  const std::uint32_t norm = (mulmod(re_, re_, p) + mulmod(im_, im_, p)) % p;
  const FieldElement n_inv = FieldElement(config_, norm).pow(p - 2);
  return frobenius(*this) * n_inv;
}

FieldElement field_op(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    case FieldOp::neg: return -a;
    case FieldOp::inv: return a.inverse();
  }
  throw InvalidArgument("unknown field operation");
}

FieldElement frobenius(const FieldElement& a) {
  return {a.config(), a.re(), -static_cast<std::int64_t>(a.im())};
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FieldElement x = a; !x.is_one(); x *= a) ++k;
  return k;
}

FieldElement find_generator(const FieldConfig& config) {
  if (config.degree() != 1) throw InvalidArgument("find_generator needs a prime field");
  const std::uint64_t n = config.p() - 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);

  for (std::uint32_t g = 2; g < config.p(); ++g) {
    const FieldElement cand(config, g);
    bool ok = true;
    for (auto f : factors) {
      if (cand.pow(n / f).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw InvariantViolation("no generator found for " + config.name());
}

std::string to_string(const FieldElement& a) {
  const auto p = static_cast<std::int64_t>(a.config().p());
  auto signed_res = [p](std::uint32_t r) {
    const auto v = static_cast<std::int64_t>(r);
    return v > p / 2 ? v - p : v;
  };
  const auto re = signed_res(a.re());
  const auto im = signed_res(a.im());
  if (im == 0) return std::to_string(re);
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = std::to_string(im) + "i";
  if (re == 0) return imag;
  return std::to_string(re) + (im > 0 ? "+" : "") + imag;
}

PhiMap::PhiMap(const FieldConfig& config) : PhiMap(config, find_generator(FieldConfig(config.p(), 1))) {}

PhiMap::PhiMap(const FieldConfig& config, const FieldElement& generator)
    : config_(config), generator_(generator), table_(config.p(), 0) {
  const FieldConfig prime(config.p(), 1);
  if (!(generator.config() == prime))
    throw InvalidArgument("generator must lie in GF(" + std::to_string(config.p()) + ")");
  if (generator.is_zero() || multiplicative_order(generator) != config.p() - 1)
    throw InvalidArgument("not a generator: " + to_string(generator));
  FieldElement x = generator;
  for (std::uint32_t k = 1; k < config.p(); ++k) {
    table_[x.re()] = (k % 2 == 0) ? 1 : -1;
    x *= generator;
  }
}

int PhiMap::sign(const FieldElement& a) const {
  if (!a.is_real()) throw InvalidArgument("phi is defined on GF(p) only, got " + to_string(a));
  if (a.config().p() != config_.p()) throw InvalidArgument("phi map applied to the wrong field");
  return table_[a.re()];
}

Rational phi_map(const FieldElement& a) {
  if (!a.is_real()) throw InvalidArgument("phi is defined on GF(p) only, got " + to_string(a));
  return PhiMap(a.config())(a);
}

Rational abs_map(const FieldElement& a) { return a.is_zero() ? 0 : 1; }

namespace {

constexpr std::uint32_t kExhaustiveLimit = 23;
constexpr std::uint32_t kUniquenessGuard = 1000;

// sign[r] in {+1, -1} for r in [1, p). Checks s(ab) = s(a)s(b) for all pairs.
bool is_homomorphism(const std::vector<int>& sign, std::uint32_t p) {
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = a; b < p; ++b)
      if (sign[static_cast<std::uint64_t>(a) * b % p] != sign[a] * sign[b]) return false;
  return true;
}

bool is_qualifying(const std::vector<int>& sign, std::uint32_t p) {
  if (sign[1] != 1) return false;
  for (std::uint32_t a = 1; a < p; ++a)
    if (sign[a] == -1) return true;
  return false;
}

}  // namespace

PhiUniquenessReport verify_phi_uniqueness(const FieldConfig& config) {
  if (config.degree() != 1) throw InvalidArgument("phi uniqueness is checked on GF(p) only");
  const std::uint32_t p = config.p();
  if (p > kUniquenessGuard)
    throw InvalidArgument("p = " + std::to_string(p) + " exceeds the enumeration guard");

  PhiUniquenessReport report;
  report.p = p;
  std::vector<std::vector<int>> survivors;

  if (p <= kExhaustiveLimit) {
    report.method = "exhaustive sign assignments";
    const std::uint64_t total = std::uint64_t{1} << (p - 1);
    std::vector<int> sign(p, 0);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      for (std::uint32_t r = 1; r < p; ++r) sign[r] = ((mask >> (r - 1)) & 1) ? -1 : 1;
      ++report.candidates_examined;
      if (!is_homomorphism(sign, p)) continue;
      ++report.homomorphisms;
      if (is_qualifying(sign, p)) survivors.push_back(sign);
    }
  } else {
    // A map out of a cyclic group is fixed by where it sends a generator.
    report.method = "generator image";
    const FieldElement g = find_generator(config);
    for (int image : {1, -1}) {
      std::vector<int> sign(p, 0);
      FieldElement x = g;
      int s = image;
      for (std::uint32_t k = 1; k < p; ++k) {
        sign[x.re()] = s;
        x *= g;
        s *= image;
      }
      ++report.candidates_examined;
      if (!is_homomorphism(sign, p)) continue;
      ++report.homomorphisms;
      if (is_qualifying(sign, p)) survivors.push_back(sign);
    }
  }

  report.qualifying = survivors.size();
  report.unique = survivors.size() == 1;
  if (report.unique) {
    const PhiMap phi(config);
    const auto& s = survivors.front();
    report.matches_phi = true;
    for (std::uint32_t r = 1; r < p; ++r) {
      if (s[r] != phi.sign(FieldElement(config, r))) report.matches_phi = false;
      if (s[r] == 1) report.kernel.push_back(r);
    }
    std::vector<std::uint32_t> even_powers;
    const FieldElement g = find_generator(config);
    const FieldElement g2 = g * g;
    FieldElement x = g2;
    for (std::uint32_t k = 0; k < (p - 1) / 2; ++k) {
      even_powers.push_back(x.re());
      x *= g2;
    }
    std::sort(even_powers.begin(), even_powers.end());
    report.kernel_is_even_powers = report.kernel == even_powers;
  }
  return report;
}

}  // namespace bqm

namespace bqm {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse field element '" + whole + "'");
  }
  if (used != s.size()) throw InvalidArgument("cannot parse field element '" + whole + "'");
  return v;
}

}  // namespace

FieldElement parse_element(const FieldConfig& config, const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw InvalidArgument("empty field element");
  if (s.back() != 'i') {
    if (s == "+" || s == "-") throw InvalidArgument("cannot parse field element '" + text + "'");
    return {config, parse_int(s, text), 0};
  }
  if (config.degree() != 2) throw InvalidArgument("'" + text + "' is not in " + config.name());
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {config, 0, parse_int(s, text)};
  const std::string re = s.substr(0, split);
  if (re == "+" || re == "-") throw InvalidArgument("cannot parse field element '" + text + "'");
  return {config, parse_int(re, text), parse_int(s.substr(split), text)};
}

}  // namespace bqm
