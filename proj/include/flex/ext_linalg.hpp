#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "flex/eigen_support.hpp"
#include "flex/errors.hpp"

namespace flex {

inline constexpr int kDefaultMaxDetOrder = 8;

// ---------------------------------------------------------------------------
// Representatives and neutrix parts

EpsMatrix representative(const ExternalMatrix& m);
EpsVector representative(const ExternalVector& v);
NeutrixMatrix neutrix_part(const ExternalMatrix& m);
NeutrixVector neutrix_part(const ExternalVector& v);

/// Entrywise rep + neutrix, canonicalized.
ExternalMatrix combine(const EpsMatrix& reps, const NeutrixMatrix& neutrices);
ExternalVector combine(const EpsVector& reps, const NeutrixVector& neutrices);

template <typename Derived>
ExternalMatrix to_external(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<ExternalScalar>();
}

/// Largest neutrix in a range (the {0} neutrix for an empty range).
template <typename Range>
Neutrix max_neutrix(const Range& r) {
  Neutrix out;
  for (const auto& n : r) out = ntx_sum(out, n);
  return out;
}

/// Smallest neutrix in a range (R for an empty range).
template <typename Range>
Neutrix min_neutrix(const Range& r) {
  Neutrix out = Neutrix::full();
  for (const auto& n : r) out = ntx_min(out, n);
  return out;
}

struct MatrixStats {
  ExternalScalar max_abs_entry;
  Neutrix max_neutrix;
  std::vector<Neutrix> row_max_neutrix;

  /// Max neutrix of column j over rows [row_begin, row_end).
  Neutrix column_max_neutrix(const ExternalMatrix& m, Eigen::Index j, Eigen::Index row_begin,
                             Eigen::Index row_end) const;
};

MatrixStats matrix_stats(const ExternalMatrix& m);

bool is_reduced(const ExternalMatrix& m);
/// Every entry is strictly contained in £.
bool is_limited(const ExternalMatrix& m);

// ---------------------------------------------------------------------------
// Determinants

/// Signed-product (Leibniz) expansion; works for any commutative scalar with
/// + and *. Exponential in the order, so bounded by `max_order`.
template <typename Scalar>
Scalar leibniz_determinant(const Mat<Scalar>& m, int max_order = kDefaultMaxDetOrder) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const auto n = static_cast<int>(m.rows());
  if (n > max_order)
    throw Error(ErrorCode::TooLarge, "determinant order " + std::to_string(n) + " exceeds bound " +
                                         std::to_string(max_order));
  if (n == 0) return Scalar(1);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Scalar term = m(0, perm[0]);
    for (int i = 1; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total = (inversions % 2 == 0) ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <typename Scalar>
Mat<Scalar> submatrix(const Mat<Scalar>& m, std::span<const Eigen::Index> rows,
                      std::span<const Eigen::Index> cols) {
  Mat<Scalar> out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(rows[i], cols[j]);
  return out;
}

ExternalScalar ext_det(const ExternalMatrix& m, int max_order = kDefaultMaxDetOrder);
ExternalScalar ext_minor(const ExternalMatrix& m, std::span<const Eigen::Index> rows,
                         std::span<const Eigen::Index> cols, int max_order = kDefaultMaxDetOrder);
bool is_nonsingular(const ExternalMatrix& m, int max_order = kDefaultMaxDetOrder);

// ---------------------------------------------------------------------------
// Application to points

/// Row i is sum_j alpha_ij * x_j, exact since each x_j is a single point.
ExternalVector mat_apply(const ExternalMatrix& m, const EpsVector& x);
/// M x ⊆ B, row by row.
bool inclusion_check(const ExternalMatrix& m, const EpsVector& x, const ExternalVector& b);
/// Entrywise set inclusion of external matrices/vectors.
bool subset_of(const ExternalMatrix& a, const ExternalMatrix& b);

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(eps)

/// Rank by fraction-field Gaussian elimination.
Eigen::Index rank(EpsMatrix m);

/// Reduced row-echelon form of the rows of `m`; zero rows removed.
EpsMatrix rref_rows(EpsMatrix m);

/// Coordinates c with basis * c = x, where the columns of `basis` are linearly
/// independent; nullopt when x is outside their span.
std::optional<EpsVector> coordinates(const EpsMatrix& basis, const EpsVector& x);

/// Inverse of an upper-triangular matrix with unit diagonal, by back substitution.
EpsMatrix unit_upper_inverse(const EpsMatrix& u);

}  // namespace flex
