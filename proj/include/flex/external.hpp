#pragma once

#include <ostream>
#include <string>

#include "flex/eps_scalar.hpp"
#include "flex/neutrix.hpp"

namespace flex {

/// External number a + A: a representative in Q(eps) plus a neutrix.
///
/// Always held in canonical form: the Laurent terms of the representative
/// that already lie in the neutrix are dropped, so equality of the sets is
/// equality of the (rep, neutrix) pairs.
class ExternalScalar {
 public:
  ExternalScalar() = default;
  ExternalScalar(int v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  ExternalScalar(const EpsScalar& rep) : rep_(rep) {}  // NOLINT(google-explicit-constructor)
  ExternalScalar(const EpsScalar& rep, const Neutrix& n);
  explicit ExternalScalar(const Neutrix& n) : ExternalScalar(EpsScalar(), n) {}

  const EpsScalar& rep() const { return rep_; }
  const Neutrix& neutrix() const { return neutrix_; }

  bool is_zeroless() const { return !neutrix_.contains(rep_); }
  bool is_neutricial() const { return rep_.is_zero(); }
  bool is_real() const { return neutrix_.is_zero(); }
  /// f ∈ a + A.
  bool contains(const EpsScalar& f) const { return neutrix_.contains(f - rep_); }
  /// Set inclusion this ⊆ other.
  bool subset_of(const ExternalScalar& other) const;

  ExternalScalar operator-() const { return {-rep_, neutrix_}; }
  ExternalScalar& operator+=(const ExternalScalar& o);
  ExternalScalar& operator-=(const ExternalScalar& o) { return *this += -o; }
  ExternalScalar& operator*=(const ExternalScalar& o);
  friend ExternalScalar operator+(ExternalScalar a, const ExternalScalar& b) { return a += b; }
  friend ExternalScalar operator-(ExternalScalar a, const ExternalScalar& b) { return a -= b; }
  friend ExternalScalar operator*(ExternalScalar a, const ExternalScalar& b) { return a *= b; }

  friend bool operator==(const ExternalScalar&, const ExternalScalar&) = default;

  std::string str() const;

 private:
  EpsScalar rep_;
  Neutrix neutrix_;
};

/// Drops every representative term lying in the neutrix.
ExternalScalar canonicalize(const EpsScalar& rep, const Neutrix& n);

ExternalScalar ext_add(const ExternalScalar& a, const ExternalScalar& b);
ExternalScalar ext_sub(const ExternalScalar& a, const ExternalScalar& b);
ExternalScalar ext_mul(const ExternalScalar& a, const ExternalScalar& b);
/// 1/(a+A) = 1/a + A/a². Throws NotZeroless.
ExternalScalar ext_inv(const ExternalScalar& a);

/// Order on external numbers. Overlapping numbers compare ≤ both ways.
bool ext_leq(const ExternalScalar& a, const ExternalScalar& b);
bool ext_lt(const ExternalScalar& a, const ExternalScalar& b);
/// |a| compared by |rep|, ties broken by the larger neutrix.
bool abs_less(const ExternalScalar& a, const ExternalScalar& b);

inline bool ext_member(const EpsScalar& f, const ExternalScalar& a) { return a.contains(f); }
inline bool is_zeroless(const ExternalScalar& a) { return a.is_zeroless(); }
inline bool is_neutricial(const ExternalScalar& a) { return a.is_neutricial(); }

/// R(a) = A/a, always ⊆ ⌀. Throws NotZeroless.
Neutrix relative_imprecision(const ExternalScalar& a);

/// Absorber/exploder extended to zeroless external numbers through the
/// valuation shared by all their representatives. Neutricial input throws
/// NotZeroless.
bool is_absorber(const ExternalScalar& a, const Neutrix& n);
bool is_exploder(const ExternalScalar& a, const Neutrix& n);

inline std::ostream& operator<<(std::ostream& os, const ExternalScalar& v) { return os << v.str(); }

}  // namespace flex
