#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arck/polyring.hpp"

namespace arck {

// Reduced Groebner basis: monic, minimal, tail-reduced, sorted by
// increasing leading monomial. Unique for a fixed ring, order and ideal.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> reduced)
      : ring_(std::move(ring)), basis_(std::move(reduced)) {}

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> basis_;
};

// Fully reduced remainder of f against a reduced basis (exact field
// arithmetic, so NF(c*f) = c*NF(f)).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

// Remainder against an arbitrary divisor list (leading coefficients need not
// be one). Used where no basis has been computed yet.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with the normal selection strategy and the Gebauer-Moeller
// pair criteria. The order is the ring's order. Throws ResourceError when a
// critical pair exceeds the ring's degree cap.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring);

// Elements of g free of the first k variables. Requires an order with the
// elimination property for those variables.
GroebnerBasis eliminate(const GroebnerBasis& g, std::size_t k);

// Invariant check used by tests and assertions: every S-pair reduces to zero
// and the basis is reduced and monic.
bool is_reduced_groebner_basis(const GroebnerBasis& g);

}  // namespace arck
