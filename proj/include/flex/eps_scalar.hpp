#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flex/polynomial.hpp"

namespace flex {

/// Exact element of Q(eps), the ordered field of rational functions in a
/// positive infinitesimal eps.
///
/// Stored as eps^shift * num / den with num(0) != 0, den(0) = 1 and
/// gcd(num, den) = 1, which makes the representation unique. Zero is
/// num = 0, den = 1, shift = 0. The valuation (order of the lowest Laurent
/// term) is therefore just `shift`, and the sign is the sign of num(0).
class EpsScalar {
 public:
  EpsScalar() : den_(mpq_class(1)) {}
  EpsScalar(int v) : EpsScalar(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  EpsScalar(const mpq_class& v);                 // NOLINT(google-explicit-constructor)
  EpsScalar(int shift, Polynomial num, Polynomial den);

  /// c * eps^k.
  static EpsScalar monomial(const mpq_class& c, int k);
  static EpsScalar eps(int k = 1) { return monomial(1, k); }
  /// Finite Laurent polynomial from {order -> coefficient}.
  static EpsScalar laurent(const std::map<int, mpq_class>& terms);

  bool is_zero() const { return num_.is_zero(); }
  /// Least exponent of the Laurent expansion; nullopt stands for +infinity.
  std::optional<int> valuation() const;
  int sign() const;
  /// Coefficient of the lowest Laurent term; zero for zero.
  mpq_class leading_coefficient() const;
  bool is_laurent_polynomial() const { return den_.degree() == 0; }
  bool is_rational() const { return is_laurent_polynomial() && num_.degree() == 0 && shift_ == 0; }

  /// Laurent coefficients for orders valuation()..max_order, inclusive.
  std::map<int, mpq_class> laurent_terms(int max_order) const;
  /// The finite Laurent polynomial made of the terms of order < order.
  EpsScalar truncated_below(int order) const;

  int shift() const { return shift_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  EpsScalar abs() const { return sign() < 0 ? -*this : *this; }
  EpsScalar inverse() const;

  EpsScalar operator-() const;
  EpsScalar& operator+=(const EpsScalar& o);
  EpsScalar& operator-=(const EpsScalar& o);
  EpsScalar& operator*=(const EpsScalar& o);
  EpsScalar& operator/=(const EpsScalar& o);
  friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
  friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
  friend EpsScalar operator*(EpsScalar a, const EpsScalar& b) { return a *= b; }
  friend EpsScalar operator/(EpsScalar a, const EpsScalar& b) { return a /= b; }

  friend bool operator==(const EpsScalar& a, const EpsScalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const EpsScalar& a, const EpsScalar& b);

  /// Laurent-polynomial text, lowest order first ("-1+2*eps"); non-polynomial
  /// values are written as a quotient "(...)/(...)" of eps-polynomials.
  std::string str() const;

 private:
  void normalize();

  int shift_ = 0;
  Polynomial num_;
  Polynomial den_;
};

enum class Ordering { Less, Equal, Greater };

Ordering es_compare(const EpsScalar& f, const EpsScalar& g);

/// Magnitude class of a scalar by valuation.
enum class Magnitude { Infinitesimal, Appreciable, Unlimited };
Magnitude classify(const EpsScalar& f);
inline bool is_limited(const EpsScalar& f) { return classify(f) != Magnitude::Unlimited; }

std::string format_laurent(const std::map<int, mpq_class>& terms);

inline std::ostream& operator<<(std::ostream& os, const EpsScalar& v) { return os << v.str(); }

}  // namespace flex
