#include "arck/polyring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "arck/error.hpp"

namespace arck {

namespace {

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("monomial exponent overflow");
  return r;
}

void check_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw ContractError("monomials over different variable counts");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_)
    if (v < 0) throw ContractError("negative exponent");
}

void Monomial::set(std::size_t i, int value) {
  if (value < 0) throw ContractError("negative exponent");
  e_.at(i) = value;
}

long Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }

long Monomial::weighted_degree(std::span<const int> weights) const {
  long d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<long>(weights[i]) * e_[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = checked_add(a.e_[i], b.e_[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw ContractError("monomial division is not exact");
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int v : e_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> weights, std::vector<std::size_t> blocks)
    : kind_(kind), weights_(std::move(weights)), blocks_(std::move(blocks)) {
  for (int w : weights_)
    if (w < 1) throw ContractError("monomial order weights must be positive");
  std::size_t total = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
  if (total > weights_.size()) throw ContractError("elimination blocks exceed variable count");
}

int MonomialOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                                 OrderKind kind) const {
  if (kind == OrderKind::Lex) {
    for (std::size_t i = lo; i < hi; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  long da = 0, db = 0;
  const bool weighted = kind == OrderKind::WeightedGRevLex;
  for (std::size_t i = lo; i < hi; ++i) {
    long w = weighted ? weights_[i] : 1;
    da += w * a[i];
    db += w * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i > lo; --i)
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  check_same_length(a, b);
  if (a.size() != weights_.size()) throw ContractError("monomial length does not match the order");
  std::size_t lo = 0;
  for (std::size_t len : blocks_) {
    if (int c = compare_range(a, b, lo, lo + len, OrderKind::WeightedGRevLex)) return c;
    lo += len;
  }
  return compare_range(a, b, lo, a.size(), kind_);
}

bool MonomialOrder::eliminates(std::size_t k) const {
  if (k == 0) return true;
  std::size_t prefix = 0;
  for (std::size_t len : blocks_) {
    prefix += len;
    if (prefix == k) return true;
  }
  return kind_ == OrderKind::Lex && k >= prefix && k <= weights_.size();
}

std::string MonomialOrder::to_string() const {
  std::string s = kind_ == OrderKind::Lex ? "lex" : kind_ == OrderKind::GRevLex ? "grevlex" : "wgrevlex";
  if (!blocks_.empty()) {
    s = "block(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
    s += ";" + std::string(kind_ == OrderKind::Lex ? "lex" : "grevlex") + ")";
  }
  return s;
}

Ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  return static_cast<Ordering>(order.compare(a, b));
}

PolyRing::PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights, MonomialOrder order,
                   int degree_cap)
    : field_(field),
      vars_(std::move(vars)),
      weights_(std::move(weights)),
      order_(std::move(order)),
      degree_cap_(degree_cap) {
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw ContractError("weights must have one entry per variable");
  for (int w : weights_)
    if (w < 1) throw ContractError("variable weights must be positive");
  if (order_.weights().size() != vars_.size()) throw ContractError("monomial order does not match variable count");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second) throw ContractError("duplicate variable name '" + v + "'");
  if (degree_cap_ < 1) throw ContractError("degree cap must be positive");
}

int PolyRing::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_ && order_ == o.order_);
}

PolyRingPtr make_ring(Field field, std::vector<std::string> vars, std::vector<int> weights, OrderKind kind,
                      int degree_cap) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  MonomialOrder order(kind, weights);
  return std::make_shared<const PolyRing>(field, std::move(vars), std::move(weights), std::move(order), degree_cap);
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  if (!ring_) throw ContractError("polynomial without a ring");
  const auto& order = ring_->order();
  for (const auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw ContractError("monomial length does not match the ring");
    if (!(t.coeff.field() == ring_->field())) throw ContractError("coefficient from a different field");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Coeff& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), c, std::move(one));
}

Polynomial Polynomial::constant(PolyRingPtr ring, long c) {
  Coeff k = Coeff::from_int(ring->field(), c);
  return constant(std::move(ring), k);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index, int power) {
  Monomial m(ring->nvars());
  m.set(index, power);
  Coeff one = Coeff::one(ring->field());
  return monomial(std::move(ring), one, std::move(m));
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Coeff& c, Monomial m) {
  std::vector<Term> t;
  t.push_back({c, std::move(m)});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ContractError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw ContractError("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  *this = minus_multiple(-Coeff::one(ring_->field()), Monomial(ring_->nvars()), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  *this = minus_multiple(Coeff::one(ring_->field()), Monomial(ring_->nvars()), o);
  return *this;
}

Polynomial Polynomial::minus_multiple(const Coeff& c, const Monomial& m, const Polynomial& g) const {
  if (!ring_) {
    Polynomial z(g.ring_);
    return z.minus_multiple(c, m, g);
  }
  check_ring(g);
  if (c.is_zero() || g.is_zero()) return *this;
  const auto& order = ring_->order();
  const bool unit_shift = m.is_one();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial gm = unit_shift ? g.terms_[j].mono : g.terms_[j].mono * m;
    int cmp = i == terms_.size() ? -1 : order.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({-(c * g.terms_[j].coeff), std::move(gm)});
      ++j;
    } else {
      Coeff k = terms_[i].coeff - c * g.terms_[j].coeff;
      if (!k.is_zero()) r.terms_.push_back({std::move(k), std::move(gm)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z(a.ring_ ? a.ring_ : b.ring_);
    if (a.ring_ && b.ring_) a.check_ring(b);
    return z;
  }
  a.check_ring(b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.times(small.terms_[0].coeff, small.terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial(a.ring_, std::move(prod));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times(const Coeff& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  if (!ring_) throw ContractError("power of a ringless polynomial");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  if (!ring_->field().is_rational()) return monic();
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    const mpq_class& q = t.coeff.rational_value();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  for (const auto& t : terms_) {
    const mpq_class& q = t.coeff.rational_value();
    mpz_class v = q.get_num() * (den / q.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  if (sgn(leading_coeff().rational_value()) < 0) num = -num;
  if (den == 1 && num == 1) return *this;
  return scaled(Coeff::rational(den, num));
}

long Polynomial::weighted_degree() const {
  long d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
  return d;
}

long Polynomial::total_degree() const {
  long d = kZeroDegree;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_[0].mono.weighted_degree(ring_->weights());
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(ring_->weights()) != d) return false;
  return true;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (!a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

Polynomial remap(const Polynomial& f, const PolyRingPtr& target, std::span<const int> var_map) {
  if (!f.ring()) return Polynomial(target);
  if (var_map.size() != f.ring()->nvars()) throw ContractError("variable map has the wrong length");
  if (!(f.ring()->field() == target->field())) throw ContractError("remap across different fields");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] < 0) throw ContractError("remap drops a variable that occurs in the polynomial");
      m.set(static_cast<std::size_t>(var_map[i]), m[static_cast<std::size_t>(var_map[i])] + t.mono[i]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace arck
