#pragma once
// Independent reference implementations used by the test suites.

#include <random>
#include <vector>

#include "flex/io.hpp"

namespace oracle {

using namespace flex;

// ---- Valuation ranges in eighths of an eps-order -----------------------------
// A neutrix is the set of scalars whose valuation lies in a range. Witnesses use
// fractional exponents, so eps*L and o (same integer probes) are told apart.

constexpr int kStep = 8;
constexpr int kSpan = 8 * kStep;  // witnesses range over valuations [-8, 8]

inline bool witness_in(const Neutrix& n, int v8) {
  switch (n.kind()) {
    case Neutrix::Kind::Zero: return false;
    case Neutrix::Kind::FullLine: return true;
    case Neutrix::Kind::Oslash: return v8 > n.order() * kStep;
    case Neutrix::Kind::Pound: return v8 >= n.order() * kStep;
  }
  return false;
}

/// Probe q*eps^k (q != 0) lies in the product set A*B, read as the convex group it spans.
inline bool probe_in_product(const Neutrix& a, const Neutrix& b, int k) {
  for (int va = -kSpan; va <= kSpan; ++va) {
    if (!witness_in(a, va)) continue;
    for (int vb = -kSpan; vb <= kSpan; ++vb)
      if (witness_in(b, vb) && va + vb <= k * kStep) return true;
  }
  // FullLine factors with a non-zero partner reach everything.
  return (a.is_full() && !b.is_zero()) || (b.is_full() && !a.is_zero());
}

/// Probe c = q*eps^k satisfies c*B ⊆ A.
inline bool probe_in_quotient(const Neutrix& a, const Neutrix& b, int k) {
  if (b.is_zero() || a.is_full()) return true;
  if (b.is_full()) return false;
  for (int vb = -kSpan; vb <= kSpan; ++vb)
    if (witness_in(b, vb) && !witness_in(a, k * kStep + vb)) return false;
  return true;
}

/// Probe q*eps^k lies in f*N.
inline bool probe_in_scaled(const EpsScalar& f, const Neutrix& n, int k) {
  if (f.is_zero() || n.is_zero()) return false;
  if (n.is_full()) return true;
  const int vf = *f.valuation() * kStep;
  for (int vn = -kSpan; vn <= kSpan; ++vn)
    if (witness_in(n, vn) && vf + vn <= k * kStep) return true;
  return false;
}

inline std::vector<EpsScalar> probes(int k) {
  std::vector<EpsScalar> out;
  for (const mpq_class& q : {mpq_class(1), mpq_class(-1), mpq_class(1, 2), mpq_class(-1, 2), mpq_class(2), mpq_class(-2)})
    out.push_back(EpsScalar::monomial(q, k));
  return out;
}

inline std::vector<Neutrix> neutrix_catalogue(int lo = -2, int hi = 2) {
  std::vector<Neutrix> out{Neutrix::zero(), Neutrix::full()};
  for (int m = lo; m <= hi; ++m) {
    out.push_back(Neutrix::oslash(m));
    out.push_back(Neutrix::pound(m));
  }
  return out;
}

// ---- Determinant by cofactor expansion along the first row --------------------

inline EpsScalar cofactor_det(const EpsMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return EpsScalar(1);
  if (n == 1) return m(0, 0);
  EpsScalar total;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    EpsMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const EpsScalar term = m(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// ---- Random generation ------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Numerator and denominator bounded by 10 in absolute value.
  mpq_class rational(bool nonzero = false) {
    while (true) {
      mpq_class q(uniform(-10, 10), uniform(1, 10));
      q.canonicalize();
      if (!nonzero || q != 0) return q;
    }
  }

  /// Laurent polynomial with up to `terms` monomials, orders in [lo, hi].
  EpsScalar laurent(int terms = 2, int lo = -2, int hi = 2) {
    EpsScalar f;
    const int t = uniform(1, terms);
    for (int i = 0; i < t; ++i) f += EpsScalar::monomial(rational(), uniform(lo, hi));
    return f;
  }

  /// Ratio of two short polynomials: exercises the rational-function path.
  EpsScalar rational_function() {
    EpsScalar den;
    while (den.is_zero()) den = laurent(2, 0, 2);
    return laurent(2, -2, 2) / den;
  }

  EpsScalar scalar() { return coin(0.25) ? rational_function() : laurent(); }

  Neutrix neutrix(double zero_p = 0.3, int lo = -2, int hi = 2) {
    if (coin(zero_p)) return Neutrix::zero();
    const int m = uniform(lo, hi);
    return coin() ? Neutrix::oslash(m) : Neutrix::pound(m);
  }

  ExternalScalar external(double zero_p = 0.3) { return ExternalScalar(laurent(), neutrix(zero_p)); }

  /// Element of the neutrix, using integer orders only.
  EpsScalar inside(const Neutrix& n) {
    if (n.is_zero() || coin(0.15)) return {};
    if (n.is_full()) return laurent();
    const int lo = n.kind() == Neutrix::Kind::Oslash ? n.order() + 1 : n.order();
    return EpsScalar::monomial(rational(true), uniform(lo, lo + 2));
  }

  /// Non-zero scalar just outside the neutrix (one order too large).
  EpsScalar outside(const Neutrix& n) {
    const int top = n.kind() == Neutrix::Kind::Oslash ? n.order() : n.order() - 1;
    return EpsScalar::monomial(rational(true), top);
  }

  /// Random system with m, n <= 4. Most are made consistent by building B around a chosen point.
  FlexibleSystem system(int max_dim = 4) {
    const int m = uniform(1, max_dim);
    const int n = uniform(1, max_dim);
    ExternalMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        const EpsScalar rep = coin(0.15) ? EpsScalar() : laurent(2, -2, 2);
        a(i, j) = ExternalScalar(rep, neutrix(0.5));
      }
    ExternalVector b(m);
    if (coin(0.8)) {
      EpsVector x(n);
      for (int j = 0; j < n; ++j) x(j) = coin(0.2) ? EpsScalar() : laurent(2, -1, 1);
      const ExternalVector ax = mat_apply(a, x);
      for (int i = 0; i < m; ++i) b(i) = ExternalScalar(ax(i).rep(), ntx_sum(ax(i).neutrix(), neutrix(0.3)));
    } else {
      for (int i = 0; i < m; ++i) b(i) = ExternalScalar(laurent(), neutrix(0.3));
    }
    for (int i = 0; i < m; ++i)
      if (b(i).neutrix().is_full()) b(i) = ExternalScalar(b(i).rep(), Neutrix::pound(-2));
    return FlexibleSystem(a, b);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---- Solution-set helpers ----------------------------------------------------

inline bool same_structure(const SolutionSet& x, const SolutionSet& y) {
  if (x.status != y.status || x.rank != y.rank) return false;
  if (!x.consistent()) return true;
  if (x.support != y.support || x.modular.size() != y.modular.size() || x.linear.size() != y.linear.size())
    return false;
  for (std::size_t i = 0; i < x.modular.size(); ++i)
    if (x.modular[i].neutrix != y.modular[i].neutrix || x.modular[i].direction != y.modular[i].direction)
      return false;
  for (std::size_t i = 0; i < x.linear.size(); ++i)
    if (x.linear[i] != y.linear[i]) return false;
  return true;
}

/// Points to test against a solution set: support, generator boundary probes, random points.
inline std::vector<EpsVector> probe_points(const SolutionSet& z, Eigen::Index n, Gen& g) {
  std::vector<EpsVector> pts;
  auto random_point = [&] {
    EpsVector x(n);
    for (Eigen::Index j = 0; j < n; ++j) x(j) = g.coin(0.3) ? EpsScalar() : g.laurent(2, -2, 2);
    return x;
  };
  for (int i = 0; i < 3; ++i) pts.push_back(random_point());
  if (!z.consistent()) return pts;
  pts.push_back(z.support);
  for (const auto& gen : z.modular) {
    const Neutrix& nx = gen.neutrix;
    if (!nx.is_scaled()) continue;
    const int top = nx.kind() == Neutrix::Kind::Oslash ? nx.order() : nx.order() - 1;
    for (int shift : {-1, 0, 1, 2}) {
      const EpsScalar t = EpsScalar::monomial(g.rational(true), top + shift);
      pts.push_back((z.support + t * gen.direction).eval());
    }
  }
  for (const auto& w : z.linear) pts.push_back((z.support + g.laurent() * w).eval());
  if (!z.modular.empty() || !z.linear.empty()) {
    EpsVector x = z.support;
    for (const auto& gen : z.modular) x += g.inside(gen.neutrix) * gen.direction;
    for (const auto& w : z.linear) x += g.laurent() * w;
    pts.push_back(x);
  }
  return pts;
}

}  // namespace oracle
