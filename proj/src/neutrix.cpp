#include "flex/neutrix.hpp"

#include <algorithm>

namespace flex {

namespace {

// Inclusion rank of a scaled neutrix: larger means bigger set.
// eps^m·⌀ -> -2m, eps^m·£ -> -2m+1, so eps·£ (−1) < ⌀ (0) < £ (1) < ⌀/eps (2).
long scaled_rank(const Neutrix& n) {
  long r = -2L * n.order();
  return n.kind() == Neutrix::Kind::Pound ? r + 1 : r;
}

Neutrix scaled(Neutrix::Kind k, int m) {
  return k == Neutrix::Kind::Oslash ? Neutrix::oslash(m) : Neutrix::pound(m);
}

}  // namespace

std::strong_ordering operator<=>(const Neutrix& a, const Neutrix& b) {
  auto tier = [](const Neutrix& n) {
    return n.is_zero() ? 0 : n.is_full() ? 2 : 1;
  };
  if (auto c = tier(a) <=> tier(b); c != 0) return c;
  if (!a.is_scaled()) return std::strong_ordering::equal;
  return scaled_rank(a) <=> scaled_rank(b);
}

bool Neutrix::contains(const EpsScalar& f) const {
  if (f.is_zero() || is_full()) return true;
  if (is_zero()) return false;
  int v = *f.valuation();
  return kind_ == Kind::Oslash ? v > order_ : v >= order_;
}

std::string Neutrix::str() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::FullLine: return "R";
    default: break;
  }
  std::string sym = kind_ == Kind::Oslash ? "o" : "L";
  if (order_ == 0) return sym;
  if (order_ == 1) return "eps*" + sym;
  return "eps^" + std::to_string(order_) + "*" + sym;
}

Neutrix ntx_sum(const Neutrix& a, const Neutrix& b) { return std::max(a, b); }

Neutrix ntx_min(const Neutrix& a, const Neutrix& b) { return std::min(a, b); }

Neutrix ntx_mul(const Neutrix& a, const Neutrix& b) {
  if (a.is_zero() || b.is_zero()) return Neutrix::zero();
  if (a.is_full() || b.is_full()) return Neutrix::full();
  bool infinitesimal = a.kind() == Neutrix::Kind::Oslash || b.kind() == Neutrix::Kind::Oslash;
  int m = a.order() + b.order();
  return infinitesimal ? Neutrix::oslash(m) : Neutrix::pound(m);
}

Neutrix ntx_scale(const EpsScalar& f, const Neutrix& n) {
  if (f.is_zero()) return Neutrix::zero();
  if (!n.is_scaled()) return n;
  return scaled(n.kind(), n.order() + *f.valuation());
}

Neutrix ntx_div(const Neutrix& a, const Neutrix& b) {
  if (b.is_zero()) return Neutrix::full();
  if (a.is_full()) return Neutrix::full();
  if (b.is_full()) return Neutrix::zero();
  if (a.is_zero()) return Neutrix::zero();
  const int m = a.order() - b.order();
  // Only eps^a·⌀ : eps^b·£ is open (infinitesimal); every other pairing is closed.
  if (a.kind() == Neutrix::Kind::Oslash && b.kind() == Neutrix::Kind::Pound) return Neutrix::oslash(m);
  return Neutrix::pound(m);
}

bool is_absorber(const EpsScalar& f, const Neutrix& n) {
  if (n.is_zero()) return false;
  if (f.is_zero()) return true;
  if (n.is_full()) return false;
  return *f.valuation() > 0;
}

bool is_exploder(const EpsScalar& f, const Neutrix& n) {
  if (f.is_zero() || !n.is_scaled()) return false;
  return *f.valuation() < 0;
}

}  // namespace flex
