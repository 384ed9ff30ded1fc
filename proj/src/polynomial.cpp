#include "flex/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "flex/errors.hpp"

namespace flex {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotZeroless: return "NotZeroless";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NotLimited: return "NotLimited";
    case ErrorCode::AbsorberDeterminant: return "AbsorberDeterminant";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const mpq_class& c, int degree) {
  assert(degree >= 0);
  if (c == 0) return {};
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

mpq_class Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::shifted_down(int k) const {
  if (k <= 0 || is_zero()) return *this;
  assert(low_degree() >= k);
  return Polynomial(std::vector<mpq_class>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<mpq_class> rem = a.coeffs_;
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
  const mpq_class& lead = b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpq_class q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / mpq_class(a.lead()));
}

std::string format_rational(const mpq_class& q) {
  mpz_class den = q.get_den();
  mpz_class d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (den == 1 || d != 1) return q.get_str();

  // Terminating decimal: scale to 10^k.
  std::size_t k = 0;
  mpz_class pow10 = 1;
  while (pow10 % den != 0) {
    pow10 *= 10;
    ++k;
  }
  mpz_class num = q.get_num() * (pow10 / den);
  bool neg = num < 0;
  if (neg) num = -num;
  std::string digits = num.get_str();
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  return neg ? "-" + out : out;
}

}  // namespace flex
