#include "flex/eps_scalar.hpp"

#include <cassert>
#include <sstream>

#include "flex/errors.hpp"

namespace flex {

EpsScalar::EpsScalar(const mpq_class& v) : num_(v), den_(mpq_class(1)) {}

EpsScalar::EpsScalar(int shift, Polynomial num, Polynomial den)
    : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

EpsScalar EpsScalar::monomial(const mpq_class& c, int k) {
  EpsScalar r(c);
  if (!r.is_zero()) r.shift_ = k;
  return r;
}

EpsScalar EpsScalar::laurent(const std::map<int, mpq_class>& terms) {
  EpsScalar r;
  for (const auto& [k, c] : terms) r += monomial(c, k);
  return r;
}

void EpsScalar::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = Polynomial(mpq_class(1));
    return;
  }
  int a = num_.low_degree();
  int b = den_.low_degree();
  shift_ += a - b;
  num_ = num_.shifted_down(a);
  den_ = den_.shifted_down(b);
  if (den_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  mpq_class c = den_[0];
  if (c != 1) {
    mpq_class inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

std::optional<int> EpsScalar::valuation() const {
  if (is_zero()) return std::nullopt;
  return shift_;
}

int EpsScalar::sign() const {
  if (is_zero()) return 0;
  return sgn(num_[0]);
}

mpq_class EpsScalar::leading_coefficient() const { return is_zero() ? mpq_class(0) : num_[0]; }

std::map<int, mpq_class> EpsScalar::laurent_terms(int max_order) const {
  std::map<int, mpq_class> out;
  if (is_zero() || max_order < shift_) return out;
  // Series of num/den with den(0) = 1.
  const int count = max_order - shift_ + 1;
  std::vector<mpq_class> c(static_cast<std::size_t>(count), mpq_class(0));
  for (int i = 0; i < count; ++i) {
    mpq_class v = num_.coeff(i);
    for (int j = 1; j <= std::min(i, den_.degree()); ++j) v -= den_[j] * c[static_cast<std::size_t>(i - j)];
    c[static_cast<std::size_t>(i)] = v;
    if (v != 0) out.emplace(shift_ + i, v);
  }
  return out;
}

EpsScalar EpsScalar::truncated_below(int order) const {
  if (is_zero() || order <= shift_) return {};
  if (is_laurent_polynomial() && shift_ + num_.degree() < order) return *this;
  return laurent(laurent_terms(order - 1));
}

EpsScalar EpsScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  EpsScalar r;
  r.shift_ = -shift_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

EpsScalar EpsScalar::operator-() const {
  EpsScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int k = std::min(shift_, o.shift_);
  Polynomial a = Polynomial::monomial(1, shift_ - k) * num_;
  Polynomial b = Polynomial::monomial(1, o.shift_ - k) * o.num_;
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    num_ = a * o.den_ + b * den_;
    den_ = den_ * o.den_;
  }
  shift_ = k;
  normalize();
  return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) { return *this += -o; }

EpsScalar& EpsScalar::operator*=(const EpsScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = EpsScalar();
  shift_ += o.shift_;
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

EpsScalar& EpsScalar::operator/=(const EpsScalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(eps)");
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const EpsScalar& a, const EpsScalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering es_compare(const EpsScalar& f, const EpsScalar& g) {
  auto c = f <=> g;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Magnitude classify(const EpsScalar& f) {
  auto v = f.valuation();
  if (!v || *v > 0) return Magnitude::Infinitesimal;
  if (*v == 0) return Magnitude::Appreciable;
  return Magnitude::Unlimited;
}

namespace {

std::string monomial_text(const mpq_class& c, int k, bool first) {
  std::string out;
  mpq_class mag = abs(c);
  if (c < 0) out += "-";
  else if (!first) out += "+";
  if (k == 0) return out + format_rational(mag);
  if (mag != 1) out += format_rational(mag) + "*";
  out += "eps";
  if (k != 1) out += "^" + std::to_string(k);
  return out;
}

}  // namespace

std::string format_laurent(const std::map<int, mpq_class>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    out += monomial_text(c, k, first);
    first = false;
  }
  return out;
}

std::string EpsScalar::str() const {
  if (is_laurent_polynomial()) {
    std::map<int, mpq_class> terms;
    mpq_class inv = 1 / den_[0];
    for (int i = 0; i <= num_.degree(); ++i)
      if (num_[i] != 0) terms.emplace(shift_ + i, num_[i] * inv);
    return format_laurent(terms);
  }
  auto poly_terms = [](const Polynomial& p, int shift) {
    std::map<int, mpq_class> t;
    for (int i = 0; i <= p.degree(); ++i)
      if (p[i] != 0) t.emplace(shift + i, p[i]);
    return t;
  };
  return "(" + format_laurent(poly_terms(num_, shift_)) + ")/(" + format_laurent(poly_terms(den_, 0)) + ")";
}

}  // namespace flex
