#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "arck/artinrees.hpp"
#include "arck/groebner.hpp"
#include "arck/ideal.hpp"
#include "arck/presentation.hpp"
#include "arck/textio.hpp"

namespace testing {

using namespace arck;

inline PolyRingPtr ring_of(std::vector<std::string> vars, OrderKind kind = OrderKind::GRevLex,
                           std::vector<int> weights = {}, Field field = Field::rationals()) {
  return make_ring(field, std::move(vars), std::move(weights), kind);
}

inline Polynomial P(const PolyRingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const PolyRingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(r, t));
  return out;
}

inline RingPtr presentation(const PolyRingPtr& r, std::initializer_list<const char*> quotient = {}) {
  return RingPresentation::create(r, Ps(r, quotient));
}

inline Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  return Ideal(R, Ps(R->ambient(), gens));
}

inline std::vector<std::string> formatted(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

// Seeded generator of small random coefficients and polynomials.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Coeff coeff(const Field& f, int bound = 5) {
    if (f.is_rational()) {
      long den = coin() ? 1 : uniform(1, 4);
      return Coeff::rational(uniform(-bound, bound), den);
    }
    return Coeff::from_int(f, uniform(0, static_cast<int>(std::min<std::uint32_t>(f.characteristic() - 1, 1000000))));
  }

  Coeff nonzero_coeff(const Field& f, int bound = 5) {
    while (true) {
      Coeff c = coeff(f, bound);
      if (!c.is_zero()) return c;
    }
  }

  Monomial monomial(const PolyRing& r, int max_degree) {
    Monomial m(r.nvars());
    int budget = uniform(0, max_degree);
    for (int k = 0; k < budget; ++k) {
      std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(r.nvars()) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  Polynomial poly(const PolyRingPtr& r, int max_terms, int max_degree, int bound = 5) {
    std::vector<Term> terms;
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k) terms.push_back({coeff(r->field(), bound), monomial(*r, max_degree)});
    return Polynomial(r, std::move(terms));
  }

  Polynomial nonzero_poly(const PolyRingPtr& r, int max_terms, int max_degree, int bound = 5) {
    while (true) {
      Polynomial p = poly(r, max_terms, max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }

  // Homogeneous of weighted degree d with up to max_terms terms.
  Polynomial homogeneous(const PolyRingPtr& r, long d, int max_terms, int bound = 3) {
    auto mons = monomials_of_degree(*r, d);
    std::vector<Term> terms;
    if (mons.empty()) return Polynomial(r);
    int n = uniform(1, max_terms);
    for (int k = 0; k < n; ++k)
      terms.push_back({nonzero_coeff(r->field(), bound), mons[static_cast<std::size_t>(uniform(0, static_cast<int>(mons.size()) - 1))]});
    return Polynomial(r, std::move(terms));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random homogeneous m-primary ideals of a one-dimensional graded ring:
// one generator of each listed degree (some forced to be a parameter),
// rejected until the ideal is m-primary.
inline std::vector<Ideal> sample_m_primary(const RingPtr& R, std::size_t count, std::uint64_t seed,
                                           std::vector<long> degrees) {
  Gen g(seed);
  std::vector<Ideal> out;
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 400 * count) {
    std::vector<Polynomial> gens;
    int k = g.uniform(1, 3);
    for (int i = 0; i < k; ++i) {
      long d = degrees[static_cast<std::size_t>(g.uniform(0, static_cast<int>(degrees.size()) - 1))];
      Polynomial p = R->reduce(g.homogeneous(R->ambient(), d, 2));
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    Ideal I(R, gens);
    if (I.is_unit() || !is_m_primary(I)) continue;
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const Ideal& o) { return equal(o, I); });
    if (!duplicate) out.push_back(I);
  }
  return out;
}

}  // namespace testing
