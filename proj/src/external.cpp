#include "flex/external.hpp"

#include "flex/errors.hpp"

namespace flex {

ExternalScalar canonicalize(const EpsScalar& rep, const Neutrix& n) {
  return {rep, n};
}

ExternalScalar::ExternalScalar(const EpsScalar& rep, const Neutrix& n) : neutrix_(n) {
  switch (n.kind()) {
    case Neutrix::Kind::Zero: rep_ = rep; break;
    case Neutrix::Kind::FullLine: break;
    case Neutrix::Kind::Oslash: rep_ = rep.truncated_below(n.order() + 1); break;
    case Neutrix::Kind::Pound: rep_ = rep.truncated_below(n.order()); break;
  }
}

bool ExternalScalar::subset_of(const ExternalScalar& other) const {
  return neutrix_.subset_of(other.neutrix_) && other.neutrix_.contains(rep_ - other.rep_);
}

ExternalScalar& ExternalScalar::operator+=(const ExternalScalar& o) {
  *this = ExternalScalar(rep_ + o.rep_, ntx_sum(neutrix_, o.neutrix_));
  return *this;
}

ExternalScalar& ExternalScalar::operator*=(const ExternalScalar& o) {
  Neutrix n = ntx_sum(ntx_sum(ntx_scale(o.rep_, neutrix_), ntx_scale(rep_, o.neutrix_)),
                      ntx_mul(neutrix_, o.neutrix_));
  *this = ExternalScalar(rep_ * o.rep_, n);
  return *this;
}

std::string ExternalScalar::str() const {
  if (neutrix_.is_zero()) return rep_.str();
  if (rep_.is_zero()) return neutrix_.str();
  return rep_.str() + "+" + neutrix_.str();
}

ExternalScalar ext_add(const ExternalScalar& a, const ExternalScalar& b) { return a + b; }
ExternalScalar ext_sub(const ExternalScalar& a, const ExternalScalar& b) { return a - b; }
ExternalScalar ext_mul(const ExternalScalar& a, const ExternalScalar& b) { return a * b; }

ExternalScalar ext_inv(const ExternalScalar& a) {
  if (!a.is_zeroless()) throw Error(ErrorCode::NotZeroless, "inverse of " + a.str());
  EpsScalar inv = a.rep().inverse();
  return {inv, ntx_scale(inv * inv, a.neutrix())};
}

bool ext_leq(const ExternalScalar& a, const ExternalScalar& b) {
  Neutrix big = ntx_sum(a.neutrix(), b.neutrix());
  if (big.contains(a.rep() - b.rep())) return true;
  return a.rep() < b.rep();
}

bool ext_lt(const ExternalScalar& a, const ExternalScalar& b) {
  Neutrix big = ntx_sum(a.neutrix(), b.neutrix());
  return !big.contains(a.rep() - b.rep()) && a.rep() < b.rep();
}

bool abs_less(const ExternalScalar& a, const ExternalScalar& b) {
  auto c = a.rep().abs() <=> b.rep().abs();
  if (c != 0) return c < 0;
  return a.neutrix() < b.neutrix();
}

Neutrix relative_imprecision(const ExternalScalar& a) {
  if (!a.is_zeroless()) throw Error(ErrorCode::NotZeroless, "relative imprecision of " + a.str());
  return ntx_scale(a.rep().inverse(), a.neutrix());
}

bool is_absorber(const ExternalScalar& a, const Neutrix& n) {
  if (!a.is_zeroless()) throw Error(ErrorCode::NotZeroless, "absorber test on " + a.str());
  return is_absorber(a.rep(), n);
}

bool is_exploder(const ExternalScalar& a, const Neutrix& n) {
  if (!a.is_zeroless()) throw Error(ErrorCode::NotZeroless, "exploder test on " + a.str());
  return is_exploder(a.rep(), n);
}

}  // namespace flex
