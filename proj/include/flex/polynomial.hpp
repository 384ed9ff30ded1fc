#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace flex {

/// Dense univariate polynomial in eps with exact rational coefficients.
/// Coefficient i multiplies eps^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  explicit Polynomial(const mpq_class& c);

  static Polynomial monomial(const mpq_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const;
  const mpq_class& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  mpq_class coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& lead() const { return coeffs_.back(); }

  /// Divides by eps^k; requires the k lowest coefficients to be zero.
  Polynomial shifted_down(int k) const;
  Polynomial scaled(const mpq_class& c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Exact rational rendered as a terminating decimal when possible, else p/q.
std::string format_rational(const mpq_class& q);

}  // namespace flex
