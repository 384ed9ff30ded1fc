#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "flex/eps_scalar.hpp"

namespace flex {

/// Convex additive subgroup of the reals from the class
///   {0} ⊂ ... ⊂ eps·⌀ ⊂ eps·£ ⊂ ⌀ ⊂ £ ⊂ ⌀/eps ⊂ £/eps ⊂ ... ⊂ R.
///
/// Oslash(m) is eps^m·⌀ (numbers of valuation > m), Pound(m) is eps^m·£
/// (valuation >= m). The class is totally ordered by inclusion and
/// `operator<=>` realizes that order.
class Neutrix {
 public:
  enum class Kind { Zero, Oslash, Pound, FullLine };

  constexpr Neutrix() = default;

  static constexpr Neutrix zero() { return {}; }
  static constexpr Neutrix full() { return Neutrix(Kind::FullLine, 0); }
  static constexpr Neutrix oslash(int order = 0) { return Neutrix(Kind::Oslash, order); }
  static constexpr Neutrix pound(int order = 0) { return Neutrix(Kind::Pound, order); }

  constexpr Kind kind() const { return kind_; }
  /// Exponent m of eps^m·K; zero for {0} and R.
  constexpr int order() const { return order_; }
  constexpr bool is_zero() const { return kind_ == Kind::Zero; }
  constexpr bool is_full() const { return kind_ == Kind::FullLine; }
  constexpr bool is_scaled() const { return kind_ == Kind::Oslash || kind_ == Kind::Pound; }

  /// Membership of an element of Q(eps).
  bool contains(const EpsScalar& f) const;
  /// Set inclusion this ⊆ other.
  bool subset_of(const Neutrix& other) const { return *this <= other; }

  friend constexpr bool operator==(const Neutrix&, const Neutrix&) = default;
  friend std::strong_ordering operator<=>(const Neutrix& a, const Neutrix& b);

  /// "0", "R", "o", "L", "eps*o", "eps^-1*L", ...
  std::string str() const;

 private:
  constexpr Neutrix(Kind k, int m) : kind_(k), order_(m) {}

  Kind kind_ = Kind::Zero;
  int order_ = 0;
};

Neutrix ntx_sum(const Neutrix& a, const Neutrix& b);
Neutrix ntx_min(const Neutrix& a, const Neutrix& b);
Neutrix ntx_mul(const Neutrix& a, const Neutrix& b);
/// f·N.
Neutrix ntx_scale(const EpsScalar& f, const Neutrix& n);
/// A : B = { c | c·B ⊆ A }.
Neutrix ntx_div(const Neutrix& a, const Neutrix& b);

/// f·N ⊂ N strictly. Zero counts as an absorber of every N ⊃ {0}.
bool is_absorber(const EpsScalar& f, const Neutrix& n);
/// f·N ⊃ N strictly.
bool is_exploder(const EpsScalar& f, const Neutrix& n);

inline std::ostream& operator<<(std::ostream& os, const Neutrix& v) { return os << v.str(); }

}  // namespace flex
