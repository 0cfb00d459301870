#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include <gmpxx.h>

namespace arck {

enum class FieldKind { Rational, Prime };

// Descriptor of a coefficient field: Q or F_p with p prime.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  // Throws ContractError unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == FieldKind::Rational; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Coeff;
  static Field trusted_prime(std::uint32_t p) {
    Field f;
    f.kind_ = FieldKind::Prime;
    f.p_ = p;
    return f;
  }

  FieldKind kind_ = FieldKind::Rational;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// An element of Q (always reduced) or of F_p (residue in [0, p)).
class Coeff {
 public:
  struct Modular {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Modular&, const Modular&) = default;
  };

  Coeff() : v_(mpq_class(0)) {}

  // Reduced rational num/den. Throws ContractError when den == 0.
  static Coeff rational(const mpz_class& num, const mpz_class& den);
  static Coeff rational(long num, long den = 1) { return rational(mpz_class(num), mpz_class(den)); }
  static Coeff from_int(const Field& field, long value);
  static Coeff from_mpz(const Field& field, const mpz_class& value);
  static Coeff zero(const Field& field) { return from_int(field, 0); }
  static Coeff one(const Field& field) { return from_int(field, 1); }

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;  // rational with denominator 1, or any residue

  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Modular>(v_).value; }

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b);

  // Throws DivisionByZero on zero.
  Coeff inverse() const;

  std::string to_string() const;

 private:
  friend std::pair<Coeff, Coeff> cancellation_multipliers(const Coeff&, const Coeff&);
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}
  explicit Coeff(Modular m) : v_(m) {}

  std::variant<mpq_class, Modular> v_;
};

Coeff normalize(const mpz_class& num, const mpz_class& den);
inline Coeff invert(const Coeff& a) { return a.inverse(); }

// Multipliers (s, t) such that s*target - t*lead cancels, chosen
// fraction-free when both inputs are integers: s = lead/g, t = target/g
// with g = gcd. Over F_p returns (1, target/lead).
std::pair<Coeff, Coeff> cancellation_multipliers(const Coeff& target, const Coeff& lead);

}  // namespace arck
