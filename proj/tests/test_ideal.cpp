#include <doctest.h>

#include <algorithm>

#include "arck/error.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace arck;
using testing::formatted;
using testing::ideal;
using testing::P;

namespace {

RingPtr family_ring(bool weighted) {
  auto r = weighted ? testing::ring_of({"x", "y", "z"}, OrderKind::WeightedGRevLex, {1, 1, 2})
                    : testing::ring_of({"x", "y", "z"});
  return testing::presentation(r, {"z^2"});
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("generators are reduced modulo the quotient") {
  RingPtr R = family_ring(false);
  Ideal I = ideal(R, {"2*x^2", "z^2 + y", "0", "y"});
  CHECK(formatted(I.generators()) == std::vector<std::string>{"x^2", "y"});
  CHECK(I.lifted_generators().size() == 3);
  CHECK(Ideal::maximal(R).generators().size() == 3);
  CHECK(Ideal::unit(R).is_unit());
  CHECK(Ideal::zero(R).is_zero());
  CHECK(ideal(R, {"z^2"}).is_zero());
}

TEST_CASE("family ideal at n = 2 parses to the expected generators") {
  RingPtr R = family_ring(true);
  Ideal I2 = ideal(R, {"x^2", "y^2", "x*y + z"});
  CHECK(I2.is_homogeneous());
  CHECK(I2.generators().size() == 3);
  // (xy + z)^2 - x^2 y^2 = 2xyz modulo z^2, and it lies in I2^2.
  Polynomial diff = R->reduce(P(R->ambient(), "(x*y + z)^2 - x^2*y^2"));
  CHECK(diff == P(R->ambient(), "2*x*y*z"));
  CHECK(member(diff, power(I2, 2)));
  CHECK(member(P(R->ambient(), "x*y*z"), power(I2, 2)));
  CHECK(membership_truncated(P(R->ambient(), "x*y*z"), power(I2, 2), 4));
  Ideal J = ideal(R, {"z"});
  CHECK_FALSE(member(P(R->ambient(), "x*y*z"), product(I2, intersect(power(I2, 1), J))));
  CHECK_FALSE(membership_truncated(P(R->ambient(), "x*y*z"), product(I2, intersect(I2, J)), 4));
}

TEST_CASE("normal forms agree with the truncated oracle") {
  RingPtr R = family_ring(true);
  Ideal I2 = ideal(R, {"x^2", "y^2", "x*y + z"});
  Ideal sq = power(I2, 2);
  for (const char* text : {"x^2*y^2", "x*y*z", "x^3*y", "y^3*x + x*y*z", "x^4"}) {
    Polynomial f = P(R->ambient(), text);
    CAPTURE(text);
    CHECK(normal_form(f, sq.basis()).is_zero() == membership_truncated(f, sq, f.weighted_degree()));
  }
}

TEST_CASE("intersection in a quotient ring") {
  RingPtr R = family_ring(false);
  Ideal k = intersect(ideal(R, {"z"}), ideal(R, {"x"}));
  CHECK(sorted(formatted(k.basis().elements())) == sorted(oracle::kZCapX));
  CHECK(formatted(k.generators()) == std::vector<std::string>{"x*z"});
  for (long d = 1; d <= 6; ++d)
    for (const auto& m : monomials_of_degree(*R->ambient(), d)) {
      Polynomial f = Polynomial::monomial(R->ambient(), Coeff::rational(1), m);
      bool both = member(f, ideal(R, {"z"})) && member(f, ideal(R, {"x"}));
      REQUIRE(member(f, k) == both);
      REQUIRE(membership_truncated(f, k, d) == both);
    }
}

TEST_CASE("colon and saturation") {
  RingPtr R = family_ring(false);
  Ideal xz = ideal(R, {"x*z"});
  Ideal c = colon(xz, P(R->ambient(), "z"));
  CHECK(sorted(formatted(c.basis().elements())) == sorted(oracle::kXzColonZ));
  CHECK(equal(c, colon_ideal(xz, ideal(R, {"z"}))));

  RingPtr S = testing::presentation(testing::ring_of({"x", "y"}));
  Ideal I = ideal(S, {"x^2", "x*y"});
  Ideal step = colon_ideal(I, Ideal::maximal(S));
  CHECK(formatted(step.basis().elements()) == oracle::kSaturation);
  CHECK(equal(colon_ideal(step, Ideal::maximal(S)), step));
  CHECK(formatted(saturate(I, Ideal::maximal(S)).basis().elements()) == oracle::kSaturation);
  CHECK(is_m_primary(ideal(S, {"x^2", "y^3"})));
  CHECK_FALSE(is_m_primary(I));
  CHECK_THROWS_AS(colon(I, P(S->ambient(), "0")), ContractError);
  CHECK(equal(colon(I, P(S->ambient(), "1")), I));
  CHECK(equal(colon(I, P(S->ambient(), "x")), ideal(S, {"x", "y"})));
  CHECK(equal(saturate(ideal(S, {"x"}), Ideal::maximal(S)), ideal(S, {"x"})));
  CHECK(saturate(ideal(S, {"x^2", "y^3"}), Ideal::maximal(S)).is_unit());
}

TEST_CASE("standard monomials and graded dimensions") {
  RingPtr S = testing::presentation(testing::ring_of({"x", "y"}));
  Ideal I = ideal(S, {"x^2"});
  CHECK(graded_dim(I, 5) == oracle::kDimX2Degree5);
  CHECK(sorted([&] {
          std::vector<std::string> out;
          for (const auto& m : std_monomials(I, 5)) out.push_back(format_monomial(m, *S->ambient()));
          return out;
        }()) == std::vector<std::string>{"x*y^4", "y^5"});
  CHECK(monomials_of_degree(*S->ambient(), 3).size() == 4);
  CHECK_THROWS_AS(graded_dim(ideal(S, {"x^2 + y"}), 2), ContractError);
}

TEST_CASE("ideal operations stay within one ring") {
  RingPtr A = testing::presentation(testing::ring_of({"x", "y"}));
  RingPtr B = testing::presentation(testing::ring_of({"x", "z"}));
  RingPtr C = testing::presentation(testing::ring_of({"x", "y"}), {"x^2"});
  CHECK_THROWS_AS(sum(ideal(A, {"x"}), ideal(B, {"z"})), ContractError);
  CHECK_THROWS_AS(intersect(ideal(A, {"x"}), ideal(C, {"y"})), ContractError);
  CHECK_THROWS_AS(member(P(B->ambient(), "z"), ideal(A, {"x"})), ContractError);
  // Structurally identical presentations are interchangeable.
  RingPtr A2 = testing::presentation(testing::ring_of({"x", "y"}));
  CHECK(equal(ideal(A, {"x", "y"}), ideal(A2, {"y", "x"})));
  CHECK(saturate(ideal(A, {"x"}), Ideal::zero(A)).is_unit());
}

TEST_CASE("exact division") {
  auto r = testing::ring_of({"x", "y"});
  CHECK(exact_divide(P(r, "x^2*y - x*y^2"), P(r, "x - y")) == P(r, "x*y"));
  CHECK_THROWS_AS(exact_divide(P(r, "x^2 + y"), P(r, "x")), InternalError);
}

TEST_CASE("ideal laws on random ideals") {
  for (int k = 0; k < 40; ++k) {
    Field field = k % 2 ? Field::prime(32003) : Field::rationals();
    auto r = testing::ring_of({"x", "y", "z"}, OrderKind::GRevLex, {}, field);
    RingPtr R = k % 4 < 2 ? testing::presentation(r) : testing::presentation(r, {"z^2"});
    testing::Gen g(500 + k);
    auto random_ideal = [&] {
      std::vector<Polynomial> gens;
      int n = g.uniform(1, 2);
      for (int i = 0; i < n; ++i) gens.push_back(g.homogeneous(r, g.uniform(1, 2), 2));
      return Ideal(R, gens);
    };
    Ideal I = random_ideal(), J = random_ideal();
    if (J.is_zero()) J = Ideal::maximal(R);
    CAPTURE(formatted(I.generators()));
    CAPTURE(formatted(J.generators()));
    Ideal s = sum(I, J), p = product(I, J), c = intersect(I, J);
    REQUIRE(is_subset(I, s));
    REQUIRE(is_subset(J, s));
    REQUIRE(is_subset(c, I));
    REQUIRE(is_subset(c, J));
    REQUIRE(is_subset(p, c));
    REQUIRE(equal(sum(I, J), sum(J, I)));
    REQUIRE(equal(product(I, J), product(J, I)));
    REQUIRE(equal(intersect(I, J), intersect(J, I)));
    REQUIRE(equal(power(I, 2), product(I, I)));
    REQUIRE(equal(I.power(3), product(power(I, 2), I)));
    Polynomial f = g.homogeneous(r, 1, 2);
    if (!f.is_zero()) {
      Ideal q = colon(I, f);
      REQUIRE(is_subset(I, q));
      for (const auto& h : q.generators()) REQUIRE(member(h * f, I));
    }
    Ideal by_generator = Ideal::unit(R);
    for (const auto& h : J.generators()) by_generator = intersect(by_generator, colon(I, h));
    Ideal cj = colon_ideal(I, J);
    REQUIRE(equal(cj, by_generator));
    REQUIRE(is_subset(product(cj, J), I));
  }
}

TEST_CASE("membership by bases agrees with the linear-algebra oracle") {
  int in = 0, out = 0;
  for (int k = 0; k < 100; ++k) {
    Field field = k % 3 == 0 ? Field::rationals() : Field::prime(101);
    bool weighted = k % 2 == 0;
    auto r = weighted ? testing::ring_of({"x", "y", "z"}, OrderKind::WeightedGRevLex, {1, 1, 2}, field)
                      : testing::ring_of({"x", "y", "z"}, OrderKind::GRevLex, {}, field);
    RingPtr R = k % 4 < 2 ? testing::presentation(r, {"z^2"}) : testing::presentation(r);
    testing::Gen g(7000 + k);
    std::vector<Polynomial> gens;
    int n = g.uniform(1, 2);
    for (int i = 0; i < n; ++i) gens.push_back(g.homogeneous(r, g.uniform(2, 3), 2));
    Ideal I(R, gens);
    long d = g.uniform(3, 5);
    Polynomial f = g.homogeneous(r, d, 3);
    if (g.coin()) {
      // Bias towards members: a homogeneous combination of the generators.
      f = Polynomial(r);
      for (const auto& h : I.lifted_generators())
        if (h.weighted_degree() <= d) f += h * g.homogeneous(r, d - h.weighted_degree(), 2);
      if (f.is_zero()) f = g.homogeneous(r, d, 3);
    }
    CAPTURE(formatted(gens));
    CAPTURE(format_polynomial(f));
    bool a = member(f, I);
    bool b = membership_truncated(f, I, f.is_zero() ? d : f.weighted_degree());
    REQUIRE(a == b);
    (a ? in : out)++;
  }
  CHECK(in > 20);
  CHECK(out > 20);
}
