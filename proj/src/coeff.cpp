#include "arck/coeff.hpp"

#include "arck/error.hpp"

namespace arck {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw ContractError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp " + std::to_string(p_);
}

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

[[noreturn]] void mixed() { throw ContractError("coefficient arithmetic mixes different fields"); }

}  // namespace

Coeff Coeff::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ContractError("invalid literal: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Coeff(std::move(q));
}

Coeff normalize(const mpz_class& num, const mpz_class& den) { return Coeff::rational(num, den); }

Coeff Coeff::from_int(const Field& field, long value) { return from_mpz(field, mpz_class(value)); }

Coeff Coeff::from_mpz(const Field& field, const mpz_class& value) {
  if (field.is_rational()) return Coeff(mpq_class(value));
  return Coeff(Modular{reduce_mod(value, field.characteristic()), field.characteristic()});
}

Field Coeff::field() const {
  if (is_rational()) return Field::rationals();
  // The modulus was validated when the owning Field was built.
  return Field::trusted_prime(std::get<Modular>(v_).modulus);
}

bool Coeff::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Modular>(v_).value == 0;
}

bool Coeff::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Modular>(v_).value == 1;
}

bool Coeff::is_integer() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_den() == 1;
  return true;
}

Coeff Coeff::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Coeff(mpq_class(-*q));
  auto m = std::get<Modular>(v_);
  m.value = m.value == 0 ? 0 : m.modulus - m.value;
  return Coeff(m);
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (v_.index() != o.v_.index()) mixed();
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
    return *this;
  }
  auto& a = std::get<Modular>(v_);
  const auto& b = std::get<Modular>(o.v_);
  if (a.modulus != b.modulus) mixed();
  a.value = static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % a.modulus);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
  if (v_.index() != o.v_.index()) mixed();
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
    return *this;
  }
  auto& a = std::get<Modular>(v_);
  const auto& b = std::get<Modular>(o.v_);
  if (a.modulus != b.modulus) mixed();
  a.value = static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % a.modulus);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) { return *this *= o.inverse(); }

Coeff Coeff::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto* q = std::get_if<mpq_class>(&v_)) return Coeff(mpq_class(1 / *q));
  auto m = std::get<Modular>(v_);
  m.value = pow_mod(m.value, m.modulus - 2, m.modulus);
  return Coeff(m);
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  return std::get<Coeff::Modular>(a.v_) == std::get<Coeff::Modular>(b.v_);
}

std::string Coeff::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Modular>(v_).value);
}

std::pair<Coeff, Coeff> cancellation_multipliers(const Coeff& target, const Coeff& lead) {
  if (lead.is_zero()) throw DivisionByZero();
  if (target.is_rational() && target.is_integer() && lead.is_integer()) {
    const mpz_class& a = lead.rational_value().get_num();
    const mpz_class& c = target.rational_value().get_num();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (a < 0) g = -g;
    return {Coeff(mpq_class(mpz_class(a / g))), Coeff(mpq_class(mpz_class(c / g)))};
  }
  return {Coeff::one(lead.field()), target / lead};
}

}  // namespace arck
