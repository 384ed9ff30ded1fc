#include "flex/solver.hpp"

#include <tuple>
#include <utility>

namespace flex {

FlexibleSystem::FlexibleSystem(ExternalMatrix a, ExternalVector b, std::vector<std::string> names)
    : a_(std::move(a)), b_(std::move(b)), names_(std::move(names)) {
  if (a_.rows() != b_.size())
    throw Error(ErrorCode::DimensionMismatch, "coefficient rows and right-hand side differ in length");
  for (Eigen::Index i = 0; i < b_.size(); ++i)
    if (b_(i).neutrix().is_full())
      throw Error(ErrorCode::ValidationError, "right-hand neutrix of row " + std::to_string(i + 1) + " is R");
  if (names_.empty())
    for (Eigen::Index j = 0; j < a_.cols(); ++j) names_.push_back("x" + std::to_string(j + 1));
  if (static_cast<Eigen::Index>(names_.size()) != a_.cols())
    throw Error(ErrorCode::DimensionMismatch, "variable names do not match the column count");
}

bool operator==(const FlexibleSystem& x, const FlexibleSystem& y) {
  return x.a_.rows() == y.a_.rows() && x.a_.cols() == y.a_.cols() && x.a_ == y.a_ && x.b_ == y.b_ &&
         x.names_ == y.names_;
}

std::vector<Neutrix> feasibility_space(const FlexibleSystem& s) {
  std::vector<Neutrix> f(static_cast<std::size_t>(s.cols()), Neutrix::full());
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    for (Eigen::Index i = 0; i < s.rows(); ++i)
      f[static_cast<std::size_t>(j)] =
          ntx_min(f[static_cast<std::size_t>(j)], ntx_div(s.B()(i).neutrix(), s.A()(i, j).neutrix()));
  return f;
}

IntegratedSystem integrate(const FlexibleSystem& s) { return integrate(s, representative(s.A())); }

IntegratedSystem integrate(const FlexibleSystem& s, const EpsMatrix& rep) {
  if (rep.rows() != s.rows() || rep.cols() != s.cols())
    throw Error(ErrorCode::DimensionMismatch, "representative matrix has the wrong shape");
  for (Eigen::Index i = 0; i < rep.rows(); ++i)
    for (Eigen::Index j = 0; j < rep.cols(); ++j)
      if (!s.A()(i, j).contains(rep(i, j)))
        throw Error(ErrorCode::ValidationError, "representative entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ") lies outside its coefficient");
  const auto f = feasibility_space(s);
  IntegratedSystem out;
  out.m = s.rows();
  for (Eigen::Index j = 0; j < s.cols(); ++j)
    if (!f[static_cast<std::size_t>(j)].is_full()) {
      out.constrained_columns.push_back(j);
      out.F_constraint.push_back(f[static_cast<std::size_t>(j)]);
    }
  const Eigen::Index k = out.k();
  out.P = EpsMatrix::Zero(s.rows() + k, s.cols());
  out.P.topRows(s.rows()) = rep;
  out.rhs.resize(s.rows() + k);
  out.rhs.head(s.rows()) = s.B();
  for (Eigen::Index h = 0; h < k; ++h) {
    out.P(s.rows() + h, out.constrained_columns[static_cast<std::size_t>(h)]) = EpsScalar(1);
    out.rhs(s.rows() + h) = ExternalScalar(out.F_constraint[static_cast<std::size_t>(h)]);
  }
  return out;
}

namespace {

bool row_is_zero(const EpsMatrix& q, Eigen::Index i, Eigen::Index from) {
  for (Eigen::Index j = from; j < q.cols(); ++j)
    if (!q(i, j).is_zero()) return false;
  return true;
}

void swap_rows(EchelonSystem& e, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  e.Q.row(a).swap(e.Q.row(b));
  std::swap(e.C(a), e.C(b));
  std::swap(e.row_origin[static_cast<std::size_t>(a)], e.row_origin[static_cast<std::size_t>(b)]);
}

// Zero rows of the working block sink to its bottom, keeping relative order.
void sink_zero_rows(EchelonSystem& e, Eigen::Index s) {
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = s; i < e.Q.rows(); ++i)
    if (!row_is_zero(e.Q, i, s)) order.push_back(i);
  for (Eigen::Index i = s; i < e.Q.rows(); ++i)
    if (row_is_zero(e.Q, i, s)) order.push_back(i);
  EchelonSystem copy = e;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Eigen::Index dst = s + static_cast<Eigen::Index>(t);
    e.Q.row(dst) = copy.Q.row(order[t]);
    e.C(dst) = copy.C(order[t]);
    e.row_origin[static_cast<std::size_t>(dst)] = copy.row_origin[static_cast<std::size_t>(order[t])];
  }
}

struct Candidate {
  Eigen::Index row;
  Eigen::Index col;
  EpsScalar scaler;
  Neutrix scaled;
};

// Lower is better: smaller scaled neutrix, no rescaling needed, leftmost pivot, topmost row.
bool better(const Candidate& a, const Candidate& b) {
  if (a.scaled != b.scaled) return a.scaled < b.scaled;
  const bool ra = a.scaler != EpsScalar(1);
  const bool rb = b.scaler != EpsScalar(1);
  return std::tie(ra, a.col, a.row) < std::tie(rb, b.col, b.row);
}

ExternalScalar scale_by(const EpsScalar& f, const ExternalScalar& a) {
  return ExternalScalar(f * a.rep(), ntx_scale(f, a.neutrix()));
}

}  // namespace

EchelonSystem to_increasing_echelon(const IntegratedSystem& sys) {
  EchelonSystem e;
  e.Q = sys.P;
  e.C = sys.rhs;
  const Eigen::Index q = e.Q.rows();
  const Eigen::Index n = e.Q.cols();
  e.perm.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) e.perm[static_cast<std::size_t>(j)] = j;
  e.row_origin.resize(static_cast<std::size_t>(q));
  for (Eigen::Index i = 0; i < q; ++i) e.row_origin[static_cast<std::size_t>(i)] = i;

  Eigen::Index s = 0;
  while (s < q && s < n) {
    sink_zero_rows(e, s);
    std::optional<Candidate> best;
    for (Eigen::Index i = s; i < q; ++i) {
      if (row_is_zero(e.Q, i, s)) break;
      Eigen::Index col = s;
      for (Eigen::Index j = s + 1; j < n; ++j)
        if (e.Q(i, j).abs() > e.Q(i, col).abs()) col = j;
      const EpsScalar& m = e.Q(i, col);
      Candidate c{i, col, m, ntx_scale(m.inverse(), e.C(i).neutrix())};
      if (!best || better(c, *best)) best = c;
    }
    if (!best) break;

    swap_rows(e, s, best->row);
    if (best->scaler != EpsScalar(1)) {
      const EpsScalar inv = best->scaler.inverse();
      for (Eigen::Index j = s; j < n; ++j) e.Q(s, j) *= inv;
      e.C(s) = scale_by(inv, e.C(s));
    }
    if (best->col != s) {
      e.Q.col(s).swap(e.Q.col(best->col));
      std::swap(e.perm[static_cast<std::size_t>(s)], e.perm[static_cast<std::size_t>(best->col)]);
    }
    for (Eigen::Index i = s + 1; i < q; ++i) {
      if (e.Q(i, s).is_zero()) continue;
      const EpsScalar f = e.Q(i, s);
      for (Eigen::Index j = s; j < n; ++j) e.Q(i, j) -= f * e.Q(s, j);
      e.C(i) = e.C(i) - scale_by(f, e.C(s));
    }
    ++s;
  }
  e.r = s;
  return e;
}

ConsistencyResult consistency_check(const EchelonSystem& e) {
  ConsistencyResult out;
  for (Eigen::Index i = e.r; i < e.C.size(); ++i)
    if (e.C(i).is_zeroless()) out.offending_rows.push_back(i);
  out.consistent = out.offending_rows.empty();
  return out;
}

SolutionSet solve_closed_form(const EchelonSystem& e) {
  if (!consistency_check(e).consistent)
    throw Error(ErrorCode::InconsistentSystem, "closed form requested for an inconsistent system");
  const Eigen::Index n = e.Q.cols();
  const Eigen::Index r = e.r;
  const EpsMatrix inv = unit_upper_inverse(e.Q.topLeftCorner(r, r));

  // y lives in echelon column order; x[perm[k]] = y[k].
  auto to_x = [&](const EpsVector& y) {
    EpsVector x(n);
    for (Eigen::Index k = 0; k < n; ++k) x(e.perm[static_cast<std::size_t>(k)]) = y(k);
    return x;
  };

  SolutionSet z;
  z.rank = r;
  z.permutation = e.perm;
  EpsVector y = EpsVector::Zero(n);
  y.head(r) = inv * representative(ExternalVector(e.C.head(r))).eval();
  z.support = to_x(y);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (e.C(i).neutrix().is_zero()) continue;
    EpsVector d = EpsVector::Zero(n);
    d.head(r) = inv.col(i);
    z.modular.push_back({e.C(i).neutrix(), to_x(d)});
  }
  for (Eigen::Index k = r; k < n; ++k) {
    EpsVector d = EpsVector::Zero(n);
    d.head(r) = -(inv * e.Q.block(0, k, r, 1)).eval();
    d(k) = EpsScalar(1);
    z.linear.push_back(to_x(d));
  }
  return z;
}

namespace {

SolutionSet run_pipeline(const IntegratedSystem& integ, Eigen::Index n) {
  const EchelonSystem e = to_increasing_echelon(integ);
  const ConsistencyResult c = consistency_check(e);
  if (c.consistent) return solve_closed_form(e);
  SolutionSet z;
  z.status = SolutionStatus::Inconsistent;
  z.support = EpsVector::Zero(n);
  z.rank = e.r;
  z.permutation = e.perm;
  z.offending_rows = c.offending_rows;
  for (auto i : c.offending_rows) z.offending_values.push_back(e.C(i));
  return z;
}

}  // namespace

SolutionSet solve(const FlexibleSystem& s) { return run_pipeline(integrate(s), s.cols()); }

SolutionSet solve(const FlexibleSystem& s, const EpsMatrix& rep) {
  return run_pipeline(integrate(s, rep), s.cols());
}

EpsMatrix generator_basis(const SolutionSet& z) {
  const Eigen::Index n = z.dimension();
  const auto km = static_cast<Eigen::Index>(z.modular.size());
  const auto kl = static_cast<Eigen::Index>(z.linear.size());
  EpsMatrix b(n, km + kl);
  for (Eigen::Index i = 0; i < km; ++i) b.col(i) = z.modular[static_cast<std::size_t>(i)].direction;
  for (Eigen::Index i = 0; i < kl; ++i) b.col(km + i) = z.linear[static_cast<std::size_t>(i)];
  return b;
}

bool solution_membership(const SolutionSet& z, const EpsVector& x) {
  if (!z.consistent()) return false;
  if (x.size() != z.dimension()) throw Error(ErrorCode::DimensionMismatch, "point has the wrong length");
  const auto c = coordinates(generator_basis(z), (x - z.support).eval());
  if (!c) return false;
  for (std::size_t i = 0; i < z.modular.size(); ++i)
    if (!z.modular[i].neutrix.contains((*c)(static_cast<Eigen::Index>(i)))) return false;
  return true;
}

namespace {

// Does the module N·v lie inside the generator group of z?
bool module_embeds(const SolutionSet& z, const EpsMatrix& basis, const Neutrix& n, const EpsVector& v) {
  const auto c = coordinates(basis, v);
  if (!c) return false;
  for (std::size_t i = 0; i < z.modular.size(); ++i)
    if (!ntx_scale((*c)(static_cast<Eigen::Index>(i)), n).subset_of(z.modular[i].neutrix)) return false;
  return true;
}

}  // namespace

bool solution_subset(const SolutionSet& z1, const SolutionSet& z2) {
  if (!z1.consistent()) return true;
  if (!z2.consistent()) return false;
  if (z1.dimension() != z2.dimension())
    throw Error(ErrorCode::DimensionMismatch, "solution sets live in different dimensions");
  if (!solution_membership(z2, z1.support)) return false;
  const EpsMatrix basis = generator_basis(z2);
  for (const auto& g : z1.modular)
    if (!module_embeds(z2, basis, g.neutrix, g.direction)) return false;
  for (const auto& w : z1.linear)
    if (!module_embeds(z2, basis, Neutrix::full(), w)) return false;
  return true;
}

Equivalence solution_equiv(const SolutionSet& z1, const SolutionSet& z2) {
  const bool a = solution_subset(z1, z2);
  const bool b = solution_subset(z2, z1);
  if (a && b) return Equivalence::Equal;
  if (a) return Equivalence::FirstInSecond;
  if (b) return Equivalence::SecondInFirst;
  return Equivalence::Incomparable;
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equal: return "Equal";
    case Equivalence::FirstInSecond: return "ProperSubset(first ⊂ second)";
    case Equivalence::SecondInFirst: return "ProperSubset(second ⊂ first)";
    case Equivalence::Incomparable: return "Incomparable";
  }
  return "?";
}

EpsMatrix linear_part(const SolutionSet& z) {
  const Eigen::Index n = z.dimension();
  EpsMatrix rows(static_cast<Eigen::Index>(z.linear.size()), n);
  for (std::size_t i = 0; i < z.linear.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = z.linear[i].transpose();
  return rref_rows(rows);
}

Eigen::Index modular_dimension(const SolutionSet& z) {
  return static_cast<Eigen::Index>(canonicalize_solution(z).modular.size());
}

}  // namespace flex
