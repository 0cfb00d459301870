#include <doctest.h>

#include "arck/error.hpp"
#include "support.hpp"

using namespace arck;
using testing::P;

TEST_CASE("monomial arithmetic") {
  Monomial a({2, 1, 0}), b({1, 3, 1});
  CHECK((a * b) == Monomial({3, 4, 1}));
  CHECK(lcm(a, b) == Monomial({2, 3, 1}));
  CHECK(Monomial({1, 0, 0}).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a / Monomial({1, 1, 0})) == Monomial({1, 0, 0}));
  CHECK_THROWS_AS(a / b, ContractError);
  CHECK(Monomial({1, 0, 0}).coprime(Monomial({0, 2, 1})));
  CHECK(b.total_degree() == 5);
  std::vector<int> w{1, 1, 2};
  CHECK(Monomial({1, 1, 1}).weighted_degree(w) == 4);
}

TEST_CASE("monomial orders") {
  Monomial x2({2, 0, 0}), xy({1, 1, 0}), y3({0, 3, 0}), xz({1, 0, 1}), y2({0, 2, 0});
  auto lex = MonomialOrder::lex(3);
  CHECK(lex.compare(x2, y3) == 1);
  CHECK(lex.compare(xy, xz) == 1);
  auto grevlex = MonomialOrder::grevlex(3);
  CHECK(grevlex.compare(y3, x2) == 1);
  CHECK(grevlex.compare(xy, xz) == 1);
  CHECK(grevlex.compare(x2, xy) == 1);
  CHECK(compare(xy, xy, grevlex) == Ordering::Equal);
  MonomialOrder weighted(OrderKind::WeightedGRevLex, {1, 1, 3});
  CHECK(weighted.compare(Monomial({0, 0, 1}), y2) == 1);
  // Equal weighted degree: the reverse-lex tie break ranks z below y^3.
  CHECK(weighted.compare(Monomial({0, 0, 1}), Monomial({0, 3, 0})) == -1);
  CHECK(weighted.compare(Monomial({0, 0, 1}), Monomial({1, 1, 0})) == 1);
  MonomialOrder block(OrderKind::GRevLex, {1, 1, 1}, {1});
  CHECK(block.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) == 1);
  CHECK(block.eliminates(1));
  CHECK_FALSE(block.eliminates(2));
  CHECK(lex.eliminates(2));
  CHECK_FALSE(grevlex.eliminates(1));
}

TEST_CASE("weighted degree of the family witness") {
  auto r = testing::ring_of({"x", "y", "z"}, OrderKind::WeightedGRevLex, {1, 1, 2});
  Polynomial xi = P(r, "x*y*z");
  CHECK(xi.weighted_degree() == 4);
  CHECK(xi.total_degree() == 3);
  CHECK(xi.is_homogeneous());
  CHECK_FALSE(P(r, "x*y + z^2").is_homogeneous());
  CHECK(Polynomial(r).weighted_degree() == kZeroDegree);
}

TEST_CASE("expansion before reducing modulo z^2") {
  auto r = testing::ring_of({"x", "y", "z"});
  CHECK(P(r, "(x*y + z)^2") == P(r, "x^2*y^2 + 2*x*y*z + z^2"));
  CHECK(P(r, "(x*y + z)^2").pow(0) == Polynomial::constant(r, 1));
}

TEST_CASE("canonical form merges terms") {
  auto r = testing::ring_of({"x", "y"});
  Polynomial p(r, {{Coeff::rational(1), Monomial({1, 0})},
                   {Coeff::rational(2), Monomial({0, 1})},
                   {Coeff::rational(-1), Monomial({1, 0})},
                   {Coeff::rational(0), Monomial({3, 3})}});
  CHECK(p.size() == 1);
  CHECK(p == P(r, "2*y"));
  CHECK(P(r, "6*x + 4/3*y").primitive() == P(r, "9*x + 2*y"));
  CHECK(P(r, "-2*x + 4").primitive() == P(r, "x - 2"));
  CHECK(P(r, "2*x + 4").monic() == P(r, "x + 2"));
  CHECK(P(r, "x - y").minus_multiple(Coeff::rational(1), Monomial({0, 0}), P(r, "x")) == P(r, "-y"));
}

TEST_CASE("polynomials from different rings do not mix") {
  auto r = testing::ring_of({"x", "y"});
  auto s = testing::ring_of({"x", "y"}, OrderKind::Lex);
  CHECK_THROWS_AS(P(r, "x") + P(s, "x"), ContractError);
}

TEST_CASE("remap moves variables between rings") {
  auto r = testing::ring_of({"x", "y"});
  auto s = testing::ring_of({"t", "y", "x"});
  std::vector<int> map{2, 1};
  CHECK(remap(P(r, "x^2*y - 3*y"), s, map) == P(s, "x^2*y - 3*y"));
  std::vector<int> drop{0, -1};
  CHECK_THROWS_AS(remap(P(r, "y"), s, drop), ContractError);
}

TEST_CASE("exponent overflow is a resource error") {
  Monomial big(std::vector<int>{1 << 30});
  CHECK_THROWS_AS(big * big * big, ResourceError);
}

TEST_CASE("commutative ring axioms on random polynomials") {
  for (Field field : {Field::rationals(), Field::prime(32003)}) {
    auto r = testing::ring_of({"x", "y", "z"}, OrderKind::GRevLex, {}, field);
    testing::Gen g(field.characteristic() + 3);
    for (int k = 0; k < 500; ++k) {
      Polynomial a = g.poly(r, 4, 3), b = g.poly(r, 4, 3), c = g.poly(r, 4, 3);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE(a * Polynomial::constant(r, 1) == a);
      REQUIRE((a * Polynomial(r)).is_zero());
      REQUIRE(a.pow(2) == a * a);
      REQUIRE(poly_mul(a, b) == a * b);
      if (!a.is_zero() && !b.is_zero()) {
        REQUIRE((a * b).total_degree() == a.total_degree() + b.total_degree());
        REQUIRE((a * b).leading_monomial() == a.leading_monomial() * b.leading_monomial());
      }
      Coeff s = g.coeff(field);
      Monomial m = g.monomial(*r, 2);
      REQUIRE(a.times(s, m) == a * Polynomial::monomial(r, s, m));
      REQUIRE(a.minus_multiple(s, m, b) == a - b.times(s, m));
    }
  }
}
