#include "bqm/properties.hpp"

#include <functional>
#include <random>

#include "bqm/biortho.hpp"
#include "bqm/entangle.hpp"

namespace bqm {

namespace {

struct Tally {
  PropertyResult r;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.counterexample = describe();
  }
};

class Source {
 public:
  explicit Source(const PropertyDomain& d) : d_(d), rng_(d.seed) {}

  FieldElement element() { return FieldElement::from_index(d_.config, rng_() % d_.config.order()); }

  FieldElement nonzero() {
    for (;;)
      if (auto e = element(); !e.is_zero()) return e;
  }

  FieldElement real() { return {d_.config, static_cast<std::int64_t>(rng_() % d_.config.p())}; }

  StateVector vector(std::size_t n) {
    std::vector<FieldElement> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(element());
    return {d_.config, std::move(c)};
  }

  StateVector physical(std::size_t n) {
    for (;;) {
      auto v = vector(n);
      if (!v.is_zero() && !is_self_orthogonal(v)) return v;
    }
  }

  std::size_t below(std::size_t n) { return rng_() % n; }

 private:
  const PropertyDomain& d_;
  std::mt19937_64 rng_;
};

std::vector<FieldElement> all_elements(const FieldConfig& c) {
  std::vector<FieldElement> out;
  for (std::uint64_t k = 0; k < c.order(); ++k) out.push_back(FieldElement::from_index(c, k));
  return out;
}

std::vector<StateVector> all_vectors(const FieldConfig& c) {
  std::vector<StateVector> out;
  for (const auto& x : all_elements(c))
    for (const auto& y : all_elements(c)) out.emplace_back(c, std::vector<FieldElement>{x, y});
  return out;
}

std::vector<StateVector> physical_reps(const FieldConfig& c, std::size_t n) {
  std::vector<StateVector> out;
  for (const auto& s : enumerate_projective(c, n))
    if (s.physical()) out.push_back(s.rep());
  return out;
}

std::string show(const StateVector& v) { return to_string(v); }
std::string show(const FieldElement& a) { return to_string(a); }

void sesquilinearity(const PropertyDomain& d, Tally& t) {
  const auto check = [&](const FieldElement& a, const StateVector& u, const StateVector& v, const StateVector& w) {
    std::vector<FieldElement> mix;
    for (std::size_t k = 0; k < u.size(); ++k) mix.push_back(a * u[k] + v[k]);
    const StateVector m(d.config, std::move(mix));
    t.expect(dot(m, w) == frobenius(a) * dot(u, w) + dot(v, w) && dot(w, m) == a * dot(w, u) + dot(w, v), [&] {
      return "a=" + show(a) + " u=" + show(u) + " v=" + show(v) + " w=" + show(w);
    });
  };
  if (d.exhaustive) {
    const auto vs = all_vectors(d.config);
    for (const auto& a : all_elements(d.config))
      for (const auto& u : vs)
        for (const auto& v : vs)
          for (const auto& w : vs) check(a, u, v, w);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) check(src.element(), src.vector(2), src.vector(2), src.vector(2));
  }
}

void conjugate_symmetry(const PropertyDomain& d, Tally& t) {
  const auto check = [&](const StateVector& u, const StateVector& v) {
    t.expect(dot(u, v) == frobenius(dot(v, u)) && dot(u, u).is_real(),
             [&] { return "u=" + show(u) + " v=" + show(v); });
  };
  if (d.exhaustive) {
    const auto vs = all_vectors(d.config);
    for (const auto& u : vs)
      for (const auto& v : vs) check(u, v);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) check(src.vector(2), src.vector(2));
  }
}

void frobenius_involution(const PropertyDomain& d, Tally& t) {
  const auto check = [&](const FieldElement& x, const FieldElement& y) {
    const auto fx = frobenius(x);
    t.expect(frobenius(fx) == x && frobenius(x * y) == fx * frobenius(y) && frobenius(x + y) == fx + frobenius(y) &&
                 (fx == x) == x.is_real(),
             [&] { return "x=" + show(x) + " y=" + show(y); });
  };
  if (d.exhaustive) {
    const auto es = all_elements(d.config);
    for (const auto& x : es)
      for (const auto& y : es) check(x, y);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) check(src.element(), src.element());
  }
}

void phase_invariance(const PropertyDomain& d, Tally& t) {
  const auto& cfg = d.config;
  const auto observables = spin_observables(cfg);
  const auto axes = spin_axes(cfg);
  const auto check1 = [&](const StateVector& v, const FieldElement& l, const Observable& a) {
    t.expect(bracket(v.scaled(l), a.matrix) == bracket(v, a.matrix),
             [&] { return "state " + show(v) + " phase " + show(l) + " observable " + a.label; });
  };
  const auto check2 = [&](const StateVector& v, const FieldElement& l, int i, int j) {
    const auto m = product_spin(cfg, i, j);
    t.expect(bracket(v.scaled(l), m) == bracket(v, m), [&] {
      return "state " + show(v) + " phase " + show(l) + " axes " + std::to_string(i) + "," + std::to_string(j);
    });
  };
  if (d.exhaustive) {
    std::vector<FieldElement> phases;
    for (const auto& e : all_elements(cfg))
      if (!e.is_zero()) phases.push_back(e);
    for (const auto& v : physical_reps(cfg, 2))
      for (const auto& l : phases)
        for (const auto& a : observables) check1(v, l, a);
    for (const auto& v : physical_reps(cfg, 4))
      for (const auto& l : phases)
        for (int i : axes)
          for (int j : axes) check2(v, l, i, j);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) {
      check1(src.physical(2), src.nonzero(), observables[src.below(observables.size())]);
      check2(src.physical(4), src.nonzero(), axes[src.below(axes.size())], axes[src.below(axes.size())]);
    }
  }
}

void eigenstate_zero_variance(const PropertyDomain& d, Tally& t) {
  const auto& cfg = d.config;
  const auto systems = enumerate_biorthogonal_systems(cfg);
  const PhiMap phi(cfg);
  const auto check = [&](const BiorthogonalSystem& s, const FieldElement& a, const FieldElement& b) {
    const auto obs = build_observable(s, {a, b});
    for (const auto& term : obs.spectral) {
      const auto m = expectation(s.kets[term.ket], obs.matrix, phi);
      t.expect(m.expectation == phi(term.eigenvalue) && m.variance == 0, [&] {
        return "ket " + show(s.kets[term.ket]) + " eigenvalue " + show(term.eigenvalue) + " E=" +
               to_string(m.expectation) + " var=" + to_string(m.variance);
      });
    }
  };
  if (d.exhaustive) {
    std::vector<FieldElement> reals;
    for (std::uint32_t k = 0; k < cfg.p(); ++k) reals.emplace_back(cfg, k);
    for (const auto& s : systems)
      for (const auto& a : reals)
        for (const auto& b : reals) check(s, a, b);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) check(systems[src.below(systems.size())], src.real(), src.real());
  }
}

void product_factorization(const PropertyDomain& d, Tally& t) {
  const auto& cfg = d.config;
  const auto axes = spin_axes(cfg);
  const PhiMap phi(cfg);
  const auto check = [&](const StateVector& x, const StateVector& y, int i, int j) {
    const auto s = classify(tensor(x, y));
    const auto expected = phi(bracket(x, pauli(cfg, i))) * phi(bracket(y, pauli(cfg, j)));
    t.expect(s.kind == StateKind::product && correlator(s, i, j) == expected, [&] {
      return show(x) + " (x) " + show(y) + " axes " + std::to_string(i) + "," + std::to_string(j);
    });
  };
  if (d.exhaustive) {
    const auto singles = physical_reps(cfg, 2);
    for (const auto& x : singles)
      for (const auto& y : singles)
        for (int i : axes)
          for (int j : axes) check(x, y, i, j);
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k)
      check(src.physical(2), src.physical(2), axes[src.below(axes.size())], axes[src.below(axes.size())]);
  }
}

void chsh_sign_identities(const PropertyDomain& d, Tally& t) {
  const auto& cfg = d.config;
  const auto quads = chsh_quadruples(cfg);
  const auto check = [&](const TwoParticleState& s, const std::array<int, 4>& q) {
    const auto [A, a, B, b] = q;
    const auto c = chsh(s, A, a, B, b).value;
    const bool ok = chsh(s, -A, -a, B, b).value == -c && chsh(s, A, a, -B, -b).value == -c &&
                    correlator(s, -A, B) == -correlator(s, A, B) && correlator(s, A, -B) == -correlator(s, A, B) &&
                    c + chsh(s, a, A, B, b).value == 2 * (correlator(s, A, B) + correlator(s, a, B));
    t.expect(ok, [&] {
      return "state " + s.label + " axes " + std::to_string(A) + std::to_string(a) + std::to_string(B) +
             std::to_string(b);
    });
  };
  if (d.exhaustive) {
    for (const auto& v : physical_reps(cfg, 4)) {
      const auto s = classify(v);
      for (const auto& q : quads) check(s, q);
    }
  } else {
    Source src(d);
    for (std::size_t k = 0; k < d.samples; ++k) check(classify(src.physical(4)), quads[src.below(quads.size())]);
  }
}

using Checker = void (*)(const PropertyDomain&, Tally&);

const std::vector<std::pair<std::string, Checker>>& registry() {
  static const std::vector<std::pair<std::string, Checker>> r = {
      {"sesquilinearity", sesquilinearity},
      {"conjugate-symmetry", conjugate_symmetry},
      {"frobenius-involution", frobenius_involution},
      {"phase-invariance", phase_invariance},
      {"eigenstate-zero-variance", eigenstate_zero_variance},
      {"product-factorization", product_factorization},
      {"chsh-sign-identities", chsh_sign_identities},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

PropertyResult check_property(const std::string& name, const PropertyDomain& domain) {
  for (const auto& [n, f] : registry()) {
    if (n != name) continue;
    Tally t;
    t.r.name = name;
    t.r.field = domain.config.name();
    t.r.exhaustive = domain.exhaustive;
    f(domain, t);
    return t.r;
  }
  throw InvalidArgument("unknown property '" + name + "'");
}

std::vector<PropertyResult> run_property_suite(const PropertyDomain& domain) {
  std::vector<PropertyResult> out;
  for (const auto& n : property_names()) out.push_back(check_property(n, domain));
  return out;
}

std::vector<PropertyDomain> standard_domains(std::size_t samples, std::uint64_t seed) {
  std::vector<PropertyDomain> out{{FieldConfig(3, 1), true, 0, 0}, {FieldConfig(3, 2), true, 0, 0}};
  for (std::uint32_t p : {7u, 11u})
    for (unsigned deg : {1u, 2u}) out.push_back({FieldConfig(p, deg), false, samples, seed + p * 10 + deg});
  return out;
}

}  // namespace bqm
