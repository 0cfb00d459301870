#include "arck/presentation.hpp"

#include "arck/error.hpp"

namespace arck {

RingPresentation::RingPresentation(PolyRingPtr ambient, std::vector<Polynomial> quotient)
    : ambient_(std::move(ambient)) {
  if (!ambient_) throw ContractError("ring presentation without an ambient ring");
  for (auto& q : quotient) {
    if (q.is_zero()) continue;
    if (!q.ring()->same_as(*ambient_)) throw ContractError("quotient generator outside the ambient ring");
    quotient_.push_back(std::move(q));
  }
}

RingPtr RingPresentation::create(PolyRingPtr ambient, std::vector<Polynomial> quotient) {
  return std::make_shared<const RingPresentation>(std::move(ambient), std::move(quotient));
}

const GroebnerBasis& RingPresentation::quotient_basis() const {
  std::call_once(gb_once_, [this] { gb_ = buchberger(quotient_, ambient_); });
  return *gb_;
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
  if (quotient_.empty() || f.is_zero()) return f;
  return normal_form(f, quotient_basis());
}

RingPtr RingPresentation::with_degree_cap(int cap) const {
  auto ring = std::make_shared<const PolyRing>(ambient_->field(), ambient_->vars(), ambient_->weights(),
                                               ambient_->order(), cap);
  std::vector<Polynomial> q;
  std::vector<int> ident(ambient_->nvars());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  for (const auto& f : quotient_) q.push_back(remap(f, ring, ident));
  return create(ring, std::move(q));
}

}  // namespace arck
