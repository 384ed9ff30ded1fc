#include "flex/ext_linalg.hpp"

namespace flex {

EpsMatrix representative(const ExternalMatrix& m) {
  return m.unaryExpr([](const ExternalScalar& a) { return a.rep(); });
}

EpsVector representative(const ExternalVector& v) {
  return v.unaryExpr([](const ExternalScalar& a) { return a.rep(); });
}

NeutrixMatrix neutrix_part(const ExternalMatrix& m) {
  return m.unaryExpr([](const ExternalScalar& a) { return a.neutrix(); });
}

NeutrixVector neutrix_part(const ExternalVector& v) {
  return v.unaryExpr([](const ExternalScalar& a) { return a.neutrix(); });
}

ExternalMatrix combine(const EpsMatrix& reps, const NeutrixMatrix& neutrices) {
  if (reps.rows() != neutrices.rows() || reps.cols() != neutrices.cols())
    throw Error(ErrorCode::DimensionMismatch, "representative and neutrix shapes differ");
  ExternalMatrix out(reps.rows(), reps.cols());
  for (Eigen::Index i = 0; i < reps.rows(); ++i)
    for (Eigen::Index j = 0; j < reps.cols(); ++j) out(i, j) = ExternalScalar(reps(i, j), neutrices(i, j));
  return out;
}

ExternalVector combine(const EpsVector& reps, const NeutrixVector& neutrices) {
  if (reps.size() != neutrices.size())
    throw Error(ErrorCode::DimensionMismatch, "representative and neutrix lengths differ");
  ExternalVector out(reps.size());
  for (Eigen::Index i = 0; i < reps.size(); ++i) out(i) = ExternalScalar(reps(i), neutrices(i));
  return out;
}

Neutrix MatrixStats::column_max_neutrix(const ExternalMatrix& m, Eigen::Index j, Eigen::Index row_begin,
                                        Eigen::Index row_end) const {
  Neutrix out;
  for (Eigen::Index i = row_begin; i < row_end; ++i) out = ntx_sum(out, m(i, j).neutrix());
  return out;
}

MatrixStats matrix_stats(const ExternalMatrix& m) {
  MatrixStats s;
  s.row_max_neutrix.assign(static_cast<std::size_t>(m.rows()), Neutrix::zero());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const ExternalScalar& a = m(i, j);
      if (abs_less(s.max_abs_entry, a)) s.max_abs_entry = a;
      auto& row = s.row_max_neutrix[static_cast<std::size_t>(i)];
      row = ntx_sum(row, a.neutrix());
    }
    s.max_neutrix = ntx_sum(s.max_neutrix, s.row_max_neutrix[static_cast<std::size_t>(i)]);
  }
  return s;
}

bool is_reduced(const ExternalMatrix& m) {
  if (m.size() == 0) return false;
  const ExternalScalar& a11 = m(0, 0);
  if (a11.rep() != EpsScalar(1) || !a11.neutrix().subset_of(Neutrix::oslash())) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == 0 && j == 0) continue;
      if (m(i, j).rep().abs() > EpsScalar(1)) return false;
      if (abs_less(a11, m(i, j))) return false;
    }
  return true;
}

bool is_limited(const ExternalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const ExternalScalar& a = m(i, j);
      if (!is_limited(a.rep()) || !(a.neutrix() < Neutrix::pound())) return false;
    }
  return true;
}

ExternalScalar ext_det(const ExternalMatrix& m, int max_order) { return leibniz_determinant(m, max_order); }

ExternalScalar ext_minor(const ExternalMatrix& m, std::span<const Eigen::Index> rows,
                         std::span<const Eigen::Index> cols, int max_order) {
  if (rows.size() != cols.size())
    throw Error(ErrorCode::DimensionMismatch, "minor needs a square selection");
  for (auto r : rows)
    if (r < 0 || r >= m.rows()) throw Error(ErrorCode::DimensionMismatch, "minor row out of range");
  for (auto c : cols)
    if (c < 0 || c >= m.cols()) throw Error(ErrorCode::DimensionMismatch, "minor column out of range");
  return leibniz_determinant(submatrix(m, rows, cols), max_order);
}

bool is_nonsingular(const ExternalMatrix& m, int max_order) { return ext_det(m, max_order).is_zeroless(); }

ExternalVector mat_apply(const ExternalMatrix& m, const EpsVector& x) {
  if (m.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix/point length mismatch");
  ExternalVector out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    EpsScalar rep;
    Neutrix n;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rep += m(i, j).rep() * x(j);
      n = ntx_sum(n, ntx_scale(x(j), m(i, j).neutrix()));
    }
    out(i) = ExternalScalar(rep, n);
  }
  return out;
}

bool inclusion_check(const ExternalMatrix& m, const EpsVector& x, const ExternalVector& b) {
  if (m.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "matrix/rhs length mismatch");
  ExternalVector lhs = mat_apply(m, x);
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (!lhs(i).subset_of(b(i))) return false;
  return true;
}

bool subset_of(const ExternalMatrix& a, const ExternalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "inclusion of differently shaped matrices");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).subset_of(b(i, j))) return false;
  return true;
}

namespace {

// In-place forward elimination; returns pivot columns in row order.
std::vector<Eigen::Index> forward_eliminate(EpsMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    EpsScalar inv = m(row, col).inverse();
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      EpsScalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Eigen::Index rank(EpsMatrix m) { return static_cast<Eigen::Index>(forward_eliminate(m).size()); }

EpsMatrix rref_rows(EpsMatrix m) {
  auto pivots = forward_eliminate(m);
  const auto r = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index k = r - 1; k >= 0; --k) {
    Eigen::Index col = pivots[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < k; ++i) {
      if (m(i, col).is_zero()) continue;
      EpsScalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(k, j);
    }
  }
  return m.topRows(r);
}

std::optional<EpsVector> coordinates(const EpsMatrix& basis, const EpsVector& x) {
  if (basis.rows() != x.size()) throw Error(ErrorCode::DimensionMismatch, "basis/vector length mismatch");
  const Eigen::Index n = basis.rows();
  const Eigen::Index k = basis.cols();
  EpsMatrix aug(n, k + 1);
  aug.leftCols(k) = basis;
  aug.col(k) = x;
  auto pivots = forward_eliminate(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (static_cast<Eigen::Index>(pivots.size()) != k)
    throw Error(ErrorCode::DimensionMismatch, "basis columns are linearly dependent");
  EpsVector c(k);
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    EpsScalar v = aug(i, k);
    for (Eigen::Index j = i + 1; j < k; ++j) v -= aug(i, j) * c(j);
    c(i) = v;
  }
  return c;
}

EpsMatrix unit_upper_inverse(const EpsMatrix& u) {
  const Eigen::Index n = u.rows();
  EpsMatrix inv = EpsMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index i = col - 1; i >= 0; --i) {
      EpsScalar v;
      for (Eigen::Index j = i + 1; j <= col; ++j) v -= u(i, j) * inv(j, col);
      inv(i, col) = v;
    }
  }
  return inv;
}

}  // namespace flex
