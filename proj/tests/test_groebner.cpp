#include <doctest.h>

#include <algorithm>

#include "arck/error.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace arck;
using testing::formatted;
using testing::P;
using testing::Ps;

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("lex basis matches the reference") {
  auto r = testing::ring_of({"x", "y"}, OrderKind::Lex);
  auto gens = Ps(r, {"x^2 - y", "x*y - 1"});
  GroebnerBasis g = buchberger(gens, r);
  CHECK(sorted(formatted(g.elements())) == sorted(oracle::kLexBasis));
  CHECK(is_reduced_groebner_basis(g));
  for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
  // Conversely, explicit cofactors put both basis elements in the input ideal.
  CHECK(P(r, "y") * gens[0] - P(r, "x") * gens[1] == P(r, "x - y^2"));
  CHECK(P(r, "1 + x*y") * gens[1] - P(r, "y^2") * gens[0] == P(r, "y^3 - 1"));
}

TEST_CASE("elimination with a lex order") {
  auto r = testing::ring_of({"y", "x"}, OrderKind::Lex);
  GroebnerBasis g = buchberger(Ps(r, {"x - y^2", "y^3 - 1"}), r);
  CHECK(formatted(eliminate(g, 1).elements()) == oracle::kEliminateY);
  auto grevlex = testing::ring_of({"y", "x"});
  CHECK_THROWS_AS(eliminate(buchberger(Ps(grevlex, {"x - y^2"}), grevlex), 1), ContractError);
}

TEST_CASE("basis sorted by increasing leading monomial and monic") {
  auto r = testing::ring_of({"x", "y", "z"});
  GroebnerBasis g = buchberger(Ps(r, {"x + y", "x - y", "2*z^2"}), r);
  CHECK(formatted(g.elements()) == std::vector<std::string>{"y", "x", "z^2"});
}

TEST_CASE("unit and zero ideals") {
  auto r = testing::ring_of({"x", "y"});
  CHECK(buchberger(Ps(r, {"x", "x + 1"}), r).is_unit_ideal());
  CHECK(buchberger(Ps(r, {"0"}), r).is_zero_ideal());
  CHECK(buchberger(std::vector<Polynomial>{}, r).is_zero_ideal());
}

TEST_CASE("s-polynomial and reduction") {
  auto r = testing::ring_of({"x", "y"}, OrderKind::Lex);
  CHECK(s_polynomial(P(r, "x^2 - y"), P(r, "x*y - 1")) == P(r, "x - y^2"));
  CHECK_THROWS_AS(s_polynomial(P(r, "0"), P(r, "x")), ContractError);
  auto divisors = Ps(r, {"2*x - 1"});
  CHECK(reduce(P(r, "x^2"), divisors) == P(r, "1/4"));
}

TEST_CASE("degree cap surfaces as a resource error") {
  auto r = make_ring(Field::rationals(), {"x", "y"}, {}, OrderKind::GRevLex, 6);
  CHECK_THROWS_AS(buchberger(Ps(r, {"x^3*y^3 + x*y", "x^5 - y^4"}), r), ResourceError);
}

TEST_CASE("random ideals: uniqueness, S-pairs and normal forms") {
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    Field field = k % 2 ? Field::prime(32003) : Field::rationals();
    OrderKind kind = k % 3 == 0 ? OrderKind::Lex : OrderKind::GRevLex;
    auto r = testing::ring_of({"x", "y", "z"}, kind, {}, field);
    testing::Gen g(1000 + k);
    std::vector<Polynomial> gens;
    int n = g.uniform(2, 3);
    for (int i = 0; i < n; ++i) gens.push_back(g.nonzero_poly(r, 3, 3, 3));
    CAPTURE(formatted(gens));
    GroebnerBasis basis = buchberger(gens, r);
    REQUIRE(is_reduced_groebner_basis(basis));
    for (const auto& f : gens) REQUIRE(normal_form(f, basis).is_zero());
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        REQUIRE(normal_form(s_polynomial(basis.elements()[a], basis.elements()[b]), basis).is_zero());

    auto shuffled = gens;
    g.shuffle(shuffled);
    shuffled.push_back(gens[0] * g.nonzero_poly(r, 2, 1) + gens.back());
    REQUIRE(buchberger(shuffled, r) == basis);

    Polynomial f = g.poly(r, 4, 4), h = g.poly(r, 4, 4);
    Coeff c = g.coeff(field), d = g.coeff(field);
    Polynomial nf = normal_form(f, basis);
    REQUIRE(normal_form(nf, basis) == nf);
    REQUIRE(normal_form(f - nf, basis).is_zero());
    REQUIRE(normal_form(f.scaled(c) + h.scaled(d), basis) == nf.scaled(c) + normal_form(h, basis).scaled(d));
    for (const auto& t : nf.terms())
      for (const auto& b : basis.elements()) REQUIRE_FALSE(b.leading_monomial().divides(t.mono));
    ++checked;
  }
  CHECK(checked == 200);
}
