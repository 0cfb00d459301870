#include "arck/textio.hpp"

#include <cctype>

#include "arck/error.hpp"

namespace arck {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring, SourcePos at) : s_(text), ring_(ring), at_(at) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, at_.line, at_.column + pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip_ws();
    bool paren = false;
    if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == '{')) {
      paren = true;
      ++pos_;
      skip_ws();
    }
    mpz_class v = integer();
    if (paren) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != ')' && s_[pos_] != '}')) fail("expected closing bracket in exponent");
      ++pos_;
    }
    if (v > 1000000) fail("exponent too large");
    return static_cast<unsigned>(v.get_ui());
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      return variables();
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek('/')) {
        ++pos_;
        std::size_t where = pos_;
        den = integer();
        if (den == 0) {
          pos_ = where;
          fail("zero denominator");
        }
      }
      const Field& field = ring_->field();
      Coeff k = field.is_rational() ? Coeff::rational(num, den)
                                    : Coeff::from_mpz(field, num) / Coeff::from_mpz(field, den);
      return Polynomial::constant(ring_, k);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // An identifier run, split greedily into known variable names. A following
  // ^exponent applies to the last variable of the run only.
  Polynomial variables() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string_view word = s_.substr(start, pos_ - start);
    Monomial m(ring_->nvars());
    std::size_t k = 0;
    std::size_t last = 0;
    while (k < word.size()) {
      std::size_t best = 0;
      int index = -1;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->vars()[v];
        if (name.size() > best && word.substr(k, name.size()) == name) {
          best = name.size();
          index = static_cast<int>(v);
        }
      }
      if (index < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(word) + "'");
      }
      auto i = static_cast<std::size_t>(index);
      m.set(i, m[i] + 1);
      last = i;
      k += best;
    }
    if (peek('^')) {
      ++pos_;
      unsigned e = exponent();
      m.set(last, m[last] - 1 + static_cast<int>(e));
    }
    return Polynomial::monomial(ring_, Coeff::one(ring_->field()), std::move(m));
  }

  std::string_view s_;
  const PolyRingPtr& ring_;
  SourcePos at_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring, SourcePos at) {
  return PolyParser(text, ring, at).parse();
}

std::string format_monomial(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += format_monomial(t.mono, *f.ring());
    }
  }
  return out;
}

}  // namespace arck
