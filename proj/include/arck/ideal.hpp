#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "arck/groebner.hpp"
#include "arck/presentation.hpp"

namespace arck {

// Finitely generated ideal of R = k[x..]/Q. Generators are kept reduced
// modulo Q and primitive; the reduced basis of (lift generators) + Q is
// computed on first use and shared by copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  // The graded maximal ideal (x1..xr).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const PolyRingPtr& ambient() const { return ring_->ambient(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  // Generators followed by the quotient generators, in the ambient ring.
  std::vector<Polynomial> lifted_generators() const;

  const GroebnerBasis& basis() const;

  bool is_zero() const;
  bool is_unit() const;
  // All lifted generators are homogeneous for the ring weights.
  bool is_homogeneous() const;

  // I^n with the lower powers cached on this ideal (n = 0 gives the unit ideal).
  Ideal power(unsigned n) const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& i, const Ideal& j);
Ideal product(const Ideal& i, const Ideal& j);
Ideal power(const Ideal& i, unsigned n);
Ideal intersect(const Ideal& i, const Ideal& j);
Ideal colon(const Ideal& i, const Polynomial& f);
Ideal colon_ideal(const Ideal& i, const Ideal& j);
// (I : J^infinity); throws ResourceError after 64 colon steps.
Ideal saturate(const Ideal& i, const Ideal& j);

bool member(const Polynomial& f, const Ideal& i);
bool equal(const Ideal& i, const Ideal& j);
bool is_subset(const Ideal& i, const Ideal& j);
// First generator of i outside j, if any.
std::optional<Polynomial> first_non_member(const Ideal& i, const Ideal& j);

// saturate(I, m) is the unit ideal.
bool is_m_primary(const Ideal& i);

// Standard monomials of weighted degree d modulo GB(lift I + Q). Requires
// homogeneous input; the error names the offending generator.
std::vector<Monomial> std_monomials(const Ideal& i, long d);
std::size_t graded_dim(const Ideal& i, long d);

// Monomials of the ambient ring with the given weighted degree.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, long d);

// Membership by solving f = sum g_i h_i as a linear system in the degree of
// f, using the lifted generators of I and Q. Independent of Groebner bases.
bool membership_truncated(const Polynomial& f, const Ideal& i, long degree_bound);

// Polynomial-ring intersection (no quotient) via a tag variable t:
// eliminate t from t*A + (1 - t)*B.
std::vector<Polynomial> intersect_generators(const PolyRingPtr& ring, std::span<const Polynomial> a,
                                             std::span<const Polynomial> b);

// p / f when f divides p exactly; InternalError otherwise.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f);

}  // namespace arck
