#include "arck/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "arck/error.hpp"
#include "arck/textio.hpp"

namespace arck {

struct Ideal::Cache {
  std::once_flag gb_once;
  std::optional<GroebnerBasis> gb;
  std::mutex power_mutex;
  std::vector<Ideal> powers;  // powers[k] = I^(k+1)
};

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring() && !(a.ambient()->same_as(*b.ambient()) &&
                                a.ring()->quotient() == b.ring()->quotient()))
    throw ContractError("ideals from different rings");
}

std::vector<int> shift_map(std::size_t n, int offset) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i) + offset;
  return m;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw ContractError("ideal without a ring");
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_as(*ring_->ambient())) throw ContractError("generator outside the ideal's ring");
    Polynomial r = ring_->reduce(g).primitive();
    if (r.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), r) == gens_.end()) gens_.push_back(std::move(r));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring->ambient(), 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring->ambient(), i));
  return Ideal(std::move(ring), std::move(vars));
}

std::vector<Polynomial> Ideal::lifted_generators() const {
  std::vector<Polynomial> out = gens_;
  out.insert(out.end(), ring_->quotient().begin(), ring_->quotient().end());
  return out;
}

const GroebnerBasis& Ideal::basis() const {
  if (!cache_) throw ContractError("default-constructed ideal");
  std::call_once(cache_->gb_once, [this] {
    if (gens_.empty()) {
      cache_->gb = ring_->quotient_basis();
      return;
    }
    cache_->gb = buchberger(lifted_generators(), ring_->ambient());
  });
  return *cache_->gb;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const { return basis().is_unit_ideal(); }

bool Ideal::is_homogeneous() const {
  for (const auto& g : lifted_generators())
    if (!g.is_homogeneous()) return false;
  return true;
}

Ideal Ideal::power(unsigned n) const {
  if (n == 0) return unit(ring_);
  if (n == 1) return *this;
  std::lock_guard lock(cache_->power_mutex);
  auto& powers = cache_->powers;
  if (powers.empty()) powers.push_back(*this);
  while (powers.size() < n) powers.push_back(product(powers.back(), *this));
  return powers[n - 1];
}

Ideal sum(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  std::vector<Polynomial> g = i.generators();
  g.insert(g.end(), j.generators().begin(), j.generators().end());
  return Ideal(i.ring(), std::move(g));
}

Ideal product(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  std::vector<Polynomial> g;
  g.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) g.push_back(a * b);
  return Ideal(i.ring(), std::move(g));
}

Ideal power(const Ideal& i, unsigned n) { return i.power(n); }

std::vector<Polynomial> intersect_generators(const PolyRingPtr& ring, std::span<const Polynomial> a,
                                             std::span<const Polynomial> b) {
  std::vector<std::string> vars{"@t"};
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  std::vector<int> weights{1};
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  std::vector<std::size_t> blocks{1};
  blocks.insert(blocks.end(), ring->order().blocks().begin(), ring->order().blocks().end());
  std::vector<int> order_weights{1};
  order_weights.insert(order_weights.end(), ring->order().weights().begin(), ring->order().weights().end());
  auto tagged = std::make_shared<const PolyRing>(ring->field(), vars, weights,
                                                 MonomialOrder(ring->order().kind(), order_weights, blocks),
                                                 ring->degree_cap());
  auto up = shift_map(ring->nvars(), 1);
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * remap(f, tagged, up));
  for (const auto& f : b) gens.push_back(one_minus_t * remap(f, tagged, up));
  GroebnerBasis g = eliminate(buchberger(gens, tagged), 1);
  std::vector<int> down = shift_map(tagged->nvars(), -1);
  down[0] = -1;
  std::vector<Polynomial> out;
  for (const auto& f : g.elements()) out.push_back(remap(f, ring, down));
  return out;
}

Ideal intersect(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  if (i.is_zero() || j.is_zero()) return Ideal::zero(i.ring());
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  auto a = i.lifted_generators();
  auto b = j.lifted_generators();
  return Ideal(i.ring(), intersect_generators(i.ambient(), a, b));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw DivisionByZero();
  Polynomial q(p.ring());
  Polynomial r = p;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!f.leading_monomial().divides(lt.mono)) throw InternalError("polynomial division is not exact");
    Coeff c = lt.coeff / f.leading_coeff();
    Monomial u = lt.mono / f.leading_monomial();
    q += Polynomial::monomial(p.ring(), c, u);
    r = r.minus_multiple(c, u, f);
  }
  return q;
}

Ideal colon(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) throw ContractError("colon by the zero element");
  if (!f.ring()->same_as(*i.ambient())) throw ContractError("colon element outside the ideal's ring");
  if (i.ring()->reduce(f).is_zero()) return Ideal::unit(i.ring());
  if (i.is_unit()) return Ideal::unit(i.ring());
  if (f.is_constant()) return i;
  auto a = i.lifted_generators();
  if (a.empty()) return Ideal::zero(i.ring());
  std::vector<Polynomial> b{f};
  std::vector<Polynomial> quotients;
  for (const auto& g : intersect_generators(i.ambient(), a, b)) quotients.push_back(exact_divide(g, f));
  return Ideal(i.ring(), std::move(quotients));
}

Ideal colon_ideal(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  if (j.is_zero()) return Ideal::unit(i.ring());
  std::optional<Ideal> acc;
  for (const auto& g : j.generators()) {
    Ideal c = colon(i, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

Ideal saturate(const Ideal& i, const Ideal& j) {
  Ideal k = i;
  for (int step = 0; step < 64; ++step) {
    Ideal next = colon_ideal(k, j);
    if (equal(next, k)) return k;
    k = std::move(next);
  }
  throw ResourceError("saturation did not stabilize within 64 colon steps");
}

bool member(const Polynomial& f, const Ideal& i) {
  if (f.is_zero()) return true;
  if (!f.ring()->same_as(*i.ambient())) throw ContractError("element outside the ideal's ring");
  return normal_form(f, i.basis()).is_zero();
}

bool equal(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  return i.basis() == j.basis();
}

std::optional<Polynomial> first_non_member(const Ideal& i, const Ideal& j) {
  check_same_ring(i, j);
  for (const auto& g : i.generators())
    if (!member(g, j)) return g;
  return std::nullopt;
}

bool is_subset(const Ideal& i, const Ideal& j) { return !first_non_member(i, j).has_value(); }

bool is_m_primary(const Ideal& i) { return saturate(i, Ideal::maximal(i.ring())).is_unit(); }

namespace {

void require_homogeneous(const Ideal& i) {
  for (const auto& g : i.lifted_generators())
    if (!g.is_homogeneous())
      throw ContractError("generator is not homogeneous for the ring weights: " + format_polynomial(g));
}

void enumerate(const PolyRing& ring, std::size_t var, long remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = ring.weights()[var];
  for (long e = remaining / w; e >= 0; --e) {
    cur.set(var, static_cast<int>(e));
    enumerate(ring, var + 1, remaining - e * w, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(ring.nvars());
  enumerate(ring, 0, d, cur, out);
  return out;
}

std::vector<Monomial> std_monomials(const Ideal& i, long d) {
  require_homogeneous(i);
  const auto& basis = i.basis().elements();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*i.ambient(), d)) {
    bool standard = std::none_of(basis.begin(), basis.end(),
                                 [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

std::size_t graded_dim(const Ideal& i, long d) { return std_monomials(i, d).size(); }

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() > b.exponents(); }
};

using SparseVector = std::map<Monomial, Coeff, MonoLess>;

// Incremental row echelon form keyed by each vector's first monomial.
class EchelonSpan {
 public:
  // Reduces v against the stored pivots; returns the remainder.
  SparseVector reduce(SparseVector v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Coeff c = it->second;
      subtract_multiple(v, c, row);
    }
    return v;
  }

  void add(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    Monomial pivot = v.begin()->first;
    Coeff inv = v.begin()->second.inverse();
    for (auto& [m, a] : v) a *= inv;
    // Keep existing rows free of the new pivot so reduce() stays one pass.
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Coeff c = it->second;
      subtract_multiple(row, c, v);
    }
    rows_.emplace(std::move(pivot), std::move(v));
  }

 private:
  // v -= c * row, dropping entries that cancel.
  static void subtract_multiple(SparseVector& v, const Coeff& c, const SparseVector& row) {
    for (const auto& [m, a] : row) {
      auto [slot, fresh] = v.try_emplace(m, Coeff::zero(a.field()));
      slot->second -= c * a;
      if (slot->second.is_zero()) v.erase(slot);
    }
  }

  std::map<Monomial, SparseVector, MonoLess> rows_;
};

SparseVector to_vector(const Polynomial& f) {
  SparseVector v;
  for (const auto& t : f.terms()) v.emplace(t.mono, t.coeff);
  return v;
}

}  // namespace

bool membership_truncated(const Polynomial& f, const Ideal& i, long degree_bound) {
  require_homogeneous(i);
  if (f.is_zero()) return true;
  if (!f.ring()->same_as(*i.ambient())) throw ContractError("element outside the ideal's ring");
  if (!f.is_homogeneous())
    throw ContractError("element is not homogeneous for the ring weights: " + format_polynomial(f));
  const long d = f.weighted_degree();
  if (d > degree_bound) throw ContractError("element degree exceeds the truncation bound");
  const auto& ring = i.ambient();
  EchelonSpan span;
  for (const auto& g : i.lifted_generators()) {
    long dg = g.weighted_degree();
    if (dg > d) continue;
    for (const auto& u : monomials_of_degree(*ring, d - dg))
      span.add(to_vector(g.times(Coeff::one(ring->field()), u)));
  }
  return span.reduce(to_vector(f)).empty();
}

}  // namespace arck
