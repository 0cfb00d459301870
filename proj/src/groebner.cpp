#include "arck/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "arck/error.hpp"

namespace arck {

bool GroebnerBasis::is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

namespace {

const Polynomial* find_divisor(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors)
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

// Full reduction with exact field division.
Polynomial reduce_exact(Polynomial p, std::span<const Polynomial> divisors, std::size_t start = 0) {
  std::size_t k = start;
  while (k < p.size()) {
    const Term& t = p.terms()[k];
    const Polynomial* g = find_divisor(t.mono, divisors);
    if (!g) {
      ++k;
      continue;
    }
    Coeff c = t.coeff / g->leading_coeff();
    Monomial u = t.mono / g->leading_monomial();
    p = p.minus_multiple(c, u, *g);
  }
  return p;
}

// Reduction that rescales p instead of dividing, keeping integer
// coefficients over Q. Only the result's ideal-class up to a unit matters.
Polynomial reduce_scaled(Polynomial p, std::span<const Polynomial> divisors, const std::vector<bool>& active) {
  std::size_t k = 0;
  unsigned steps = 0;
  while (k < p.size()) {
    const Term& t = p.terms()[k];
    const Polynomial* g = nullptr;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (active[i] && divisors[i].leading_monomial().divides(t.mono)) {
        g = &divisors[i];
        break;
      }
    }
    if (!g) {
      ++k;
      continue;
    }
    auto [s, c] = cancellation_multipliers(t.coeff, g->leading_coeff());
    Monomial u = t.mono / g->leading_monomial();
    if (!s.is_one()) p = p.scaled(s);
    p = p.minus_multiple(c, u, *g);
    if (++steps % 16 == 0) p = p.primitive();
  }
  return p.primitive();
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  long degree;
};

class Buchberger {
 public:
  explicit Buchberger(const PolyRingPtr& ring) : ring_(ring), order_(ring->order()) {}

  void add_generator(const Polynomial& f) {
    if (unit_) return;
    if (f.is_zero()) return;
    check_degree(f.leading_monomial().total_degree());
    Polynomial h = reduce_scaled(f.primitive(), polys_, active_);
    insert(std::move(h));
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (before(pairs_[k], pairs_[best])) best = k;
      CriticalPair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      check_degree(p.lcm.total_degree());
      Polynomial s = spair(polys_[p.i], polys_[p.j], p.lcm);
      insert(reduce_scaled(std::move(s), polys_, active_));
    }
  }

  GroebnerBasis finish() {
    if (unit_) return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)});
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) basis.push_back(polys_[i].monic());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = reduce_exact(std::move(basis[i]), others, 1);
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(basis));
  }

 private:
  bool before(const CriticalPair& a, const CriticalPair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = order_.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  void check_degree(long d) const {
    if (d > ring_->degree_cap())
      throw ResourceError("Groebner computation exceeded the degree cap of " + std::to_string(ring_->degree_cap()));
  }

  Polynomial spair(const Polynomial& f, const Polynomial& g, const Monomial& l) const {
    Monomial uf = l / f.leading_monomial();
    Monomial ug = l / g.leading_monomial();
    auto [s, c] = cancellation_multipliers(f.leading_coeff(), g.leading_coeff());
    return f.times(s, uf).minus_multiple(c, ug, g);
  }

  CriticalPair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(polys_[i].leading_monomial(), polys_[j].leading_monomial());
    long d = l.weighted_degree(ring_->weights());
    return {i, j, std::move(l), d};
  }

  void insert(Polynomial h) {
    if (h.is_zero()) return;
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<CriticalPair> c;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) c.push_back(make_pair(g, hi));
    std::vector<CriticalPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool keep = lh.coprime(polys_[p.i].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].lcm.divides(p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (d[m].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<CriticalPair> kept;
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial li = lcm(polys_[p.i].leading_monomial(), lh);
        Monomial lj = lcm(polys_[p.j].leading_monomial(), lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!lh.coprime(polys_[p.i].leading_monomial())) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  PolyRingPtr ring_;
  const MonomialOrder& order_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  bool unit_ = false;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (f.is_zero()) return f;
  if (g.ring() && !f.ring()->same_as(*g.ring())) throw ContractError("normal form across different rings or orders");
  return reduce_exact(f, g.elements());
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors)
    if (!d.is_zero() && !f.is_zero() && !f.ring()->same_as(*d.ring()))
      throw ContractError("reduction across different rings or orders");
  return reduce_exact(f, divisors);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ContractError("S-polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times(f.leading_coeff().inverse(), l / f.leading_monomial());
  return a.minus_multiple(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring) {
  Buchberger engine(ring);
  for (const auto& f : gens) {
    if (!f.is_zero() && !f.ring()->same_as(*ring)) throw ContractError("generator from a different ring");
    engine.add_generator(f);
  }
  engine.run();
  return engine.finish();
}

GroebnerBasis eliminate(const GroebnerBasis& g, std::size_t k) {
  if (k == 0) return g;
  if (!g.ring() || !g.ring()->order().eliminates(k))
    throw ContractError("order lacks the elimination property for the first " + std::to_string(k) + " variables");
  std::vector<Polynomial> kept;
  for (const auto& f : g.elements()) {
    bool free = true;
    for (const auto& t : f.terms())
      for (std::size_t v = 0; v < k && free; ++v)
        if (t.mono[v] != 0) free = false;
    if (free) kept.push_back(f);
  }
  return GroebnerBasis(g.ring(), std::move(kept));
}

bool is_reduced_groebner_basis(const GroebnerBasis& g) {
  const auto& b = g.elements();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero() || !b[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[i].terms())
        if (b[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j]), g).is_zero()) return false;
  return true;
}

}  // namespace arck
