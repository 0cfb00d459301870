#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "arck/groebner.hpp"
#include "arck/polyring.hpp"

namespace arck {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// R = k[x1..xr]/Q. The graded maximal ideal is always (x1..xr) + Q.
// Arithmetic never reduces modulo Q implicitly; call reduce().
class RingPresentation {
 public:
  static RingPtr create(PolyRingPtr ambient, std::vector<Polynomial> quotient = {});

  const PolyRingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& quotient() const { return quotient_; }
  bool has_quotient() const { return !quotient_.empty(); }
  std::size_t nvars() const { return ambient_->nvars(); }

  // Reduced basis of Q, computed once.
  const GroebnerBasis& quotient_basis() const;
  // Canonical representative of f modulo Q.
  Polynomial reduce(const Polynomial& f) const;

  // Same variables and quotient, with a different degree cap.
  RingPtr with_degree_cap(int cap) const;

  RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> quotient);

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> quotient_;
  mutable std::once_flag gb_once_;
  mutable std::optional<GroebnerBasis> gb_;
};

}  // namespace arck
