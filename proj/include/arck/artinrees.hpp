#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arck/coeff.hpp"
#include "arck/ideal.hpp"

namespace arck {

// R/J as a new presentation over the same ambient ring.
RingPtr quotient_ring(const Ideal& j);
// Generators of i carried into another presentation of the same ambient ring.
Ideal extend(const Ideal& i, const RingPtr& target);

struct ArCheck {
  bool holds = false;
  // A generator of I^n ∩ J outside the right-hand side when holds is false.
  std::optional<Polynomial> witness;
};

// I^n ∩ J == I^(n-h) (I^h ∩ J). The inclusion ⊇ is asserted on every call
// (InternalError if it fails). Requires h <= n.
ArCheck check_strong_ar(const Ideal& i, const Ideal& j, unsigned h, unsigned n);
// I^n ∩ J ⊆ I^(n-h) J. Requires h <= n.
ArCheck check_weak_ar(const Ideal& i, const Ideal& j, unsigned h, unsigned n);

struct ArCell {
  bool evaluated = false;
  bool holds = false;
  std::optional<Polynomial> witness;
};

struct ArWitness {
  unsigned n;
  unsigned h;
  Polynomial element;
};

struct ArReport {
  unsigned nmax = 0;
  // cells[n][h] for 1 <= n <= nmax, 0 <= h <= n; row 0 is unused.
  std::vector<std::vector<ArCell>> cells;
  // minimal_h[n]: least h <= n that works at exponent n. Always present for a
  // complete row since h = n holds trivially.
  std::vector<std::optional<unsigned>> minimal_h;
  // Least h such that every n with h <= n <= nmax works ("none <= nmax" when empty).
  std::optional<unsigned> uniform_h;
  std::vector<ArWitness> witnesses;
  bool complete = true;
  std::string incomplete_reason;
};

// Exhaustive (n, h) scan. Cells are evaluated concurrently on `threads`
// workers; the report does not depend on the thread count.
ArReport find_ar_table(const Ideal& i, const Ideal& j, unsigned nmax, unsigned threads = 1);

// N1 ∩ (N2 + m^n) ⊆ (N1 ∩ N2) + m^(n-h) N1. Requires h < n.
bool check_lemma_first(const Ideal& n1, const Ideal& n2, unsigned h, unsigned n);
// Least h < n for which check_lemma_first holds.
std::optional<unsigned> least_lemma_first_h(const Ideal& n1, const Ideal& n2, unsigned n);

// Searches y = sum c_i g_i with I^n = y I^(n-1): unit vectors first, then
// pseudorandom coefficients in {-2..2} seeded from the generators and `seed`.
std::optional<Polynomial> find_reduction_element(const Ideal& i, unsigned n, unsigned attempts,
                                                 std::uint64_t seed = 0);

// l(R / m^(n+1)).
std::size_t hilbert_samuel(const RingPtr& ring, unsigned n);
// Stabilized first difference of the Hilbert-Samuel function (horizon 24).
// ContractError when the ring is not one-dimensional.
unsigned multiplicity(const RingPtr& ring);

// l((J : m^inf) / J) for a homogeneous J.
std::size_t h0_length(const Ideal& j);

struct TheoremBound {
  std::size_t h0_length = 0;
  unsigned r = 0;  // multiplicity of R / (J : m^inf)
  std::optional<unsigned> bound;  // empty unless R/J is Cohen-Macaulay
  bool cohen_macaulay = false;    // R/J has no m-torsion
};

// max{r, l} + l with l = h0_length(J), r = e(R / (J : m^inf)), computed only when l = 0.
TheoremBound theorem_bound(const Ideal& j);

struct ReltypeReport {
  std::vector<Polynomial> minimal_generators;
  PolyRingPtr rees_ring;              // variables T1..Tm followed by the ring variables
  std::vector<Polynomial> kernel;     // reduced basis of L, T-degree-compatible order
  std::vector<unsigned> kernel_degrees;
  unsigned reltype = 1;
  std::vector<Polynomial> certificate;  // kernel elements of T-degree 1..reltype
};

ReltypeReport reltype(const Ideal& i);

struct LemmaCheck {
  bool holds = true;
  unsigned h = 0;
  unsigned reltype = 1;
  std::optional<unsigned> failing_n;
  std::optional<Polynomial> witness;
};

// I^n ∩ J == I^(n-h)(I^h ∩ J) for every h < n <= nmax. Throws ContractError
// when h is below reltype(I R/J).
LemmaCheck check_relationtype_lemma(const Ideal& i, const Ideal& j, unsigned h, unsigned nmax);

struct ExampleVerdict {
  unsigned n = 0;
  RingPtr ring;
  Ideal family_ideal;
  Ideal j;
  Polynomial xi;
  bool in_power_cap_j = false;  // xi in I^n ∩ J
  bool in_product = true;       // xi in I (I^(n-1) ∩ J)
  bool identity_holds = false;

  bool confirmed() const { return in_power_cap_j && !in_product && identity_holds; }
};

// R = k[x,y,z]/(z^2), I_n = (x^n, y^n, x^(n-1)y + z), J = (z),
// xi = x^((n-1)^2) y^(n-1) z, graded with deg z = n. Needs char k > n.
ExampleVerdict verify_example1(unsigned n, Field field = Field::rationals());
// R = k[x,y,z]/(xz), I_n = (x^n, y^n, x^(n-1)y + z^n), J = (z), xi = z^(n^2).
ExampleVerdict verify_example2(unsigned n, Field field = Field::rationals());

}  // namespace arck
