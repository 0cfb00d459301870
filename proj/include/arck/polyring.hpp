#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arck/coeff.hpp"

namespace arck {

// Exponent vector. Its length always equals the owning ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  const std::vector<int>& exponents() const { return e_; }

  long total_degree() const;
  long weighted_degree(std::span<const int> weights) const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a / b; throws ContractError unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::vector<int> e_;
};

enum class OrderKind { Lex, GRevLex, WeightedGRevLex };

// A monomial order, optionally preceded by elimination blocks. Each leading
// block compares its variables by weighted degree, then reverse-lex; the
// remaining variables follow `kind`. Weights have one entry per variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<int> weights, std::vector<std::size_t> blocks = {});

  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::Lex, std::vector<int>(nvars, 1)}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::GRevLex, std::vector<int>(nvars, 1)}; }

  OrderKind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  // -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  // True when every monomial involving one of the first k variables exceeds
  // every monomial free of them.
  bool eliminates(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, OrderKind kind) const;

  OrderKind kind_ = OrderKind::GRevLex;
  std::vector<int> weights_;
  std::vector<std::size_t> blocks_;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };
Ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

inline constexpr int kDefaultDegreeCap = 64;

// Ambient polynomial ring k[x1..xr] with grading weights and a monomial
// order. Immutable and shared between polynomials.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights, MonomialOrder order,
           int degree_cap = kDefaultDegreeCap);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  int degree_cap() const { return degree_cap_; }

  // Index of a variable name or -1.
  int var_index(const std::string& name) const;

  bool same_as(const PolyRing& other) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  MonomialOrder order_;
  int degree_cap_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_ring(Field field, std::vector<std::string> vars, std::vector<int> weights = {},
                      OrderKind kind = OrderKind::GRevLex, int degree_cap = kDefaultDegreeCap);

struct Term {
  Coeff coeff;
  Monomial mono;
};

inline constexpr long kZeroDegree = LONG_MIN;

// Sparse polynomial in canonical form: nonzero coefficients, monomials
// strictly decreasing under the ring's order. Zero is the empty term list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  // Canonicalizes an arbitrary term list (any order, repeats, zeros).
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const Coeff& c);
  static Polynomial constant(PolyRingPtr ring, long c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index, int power = 1);
  static Polynomial monomial(PolyRingPtr ring, const Coeff& c, Monomial m);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Coeff& c) const;
  Polynomial times(const Coeff& c, const Monomial& m) const;
  // this - c*m*g in one merge pass.
  Polynomial minus_multiple(const Coeff& c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(unsigned n) const;

  // Leading coefficient one (zero stays zero).
  Polynomial monic() const;
  // Over Q: integer coefficients with content one and positive leading
  // coefficient. Over F_p: monic.
  Polynomial primitive() const;

  long weighted_degree() const;
  long total_degree() const;
  bool is_homogeneous() const;  // with respect to the ring weights

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
inline long weighted_degree(const Polynomial& f) { return f.weighted_degree(); }

// Rewrites f into `target`. Source variable i becomes target variable
// var_map[i]; var_map[i] == -1 requires that variable to be absent from f.
Polynomial remap(const Polynomial& f, const PolyRingPtr& target, std::span<const int> var_map);

}  // namespace arck
