#include "flex/robustness.hpp"

#include <future>

namespace flex {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Essential: return "Essential";
    case Verdict::Feasible: return "Feasible";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

void require_limited(const FlexibleSystem& s) {
  if (!is_limited(s.A())) throw Error(ErrorCode::NotLimited, "coefficient matrix is not limited");
}

}  // namespace

EssentialReport essential_part_check(const FlexibleSystem& s, Eigen::Index r, int max_order) {
  const Eigen::Index m = s.rows();
  const Eigen::Index n = s.cols();
  if (r < 1 || r >= m || r > n)
    throw Error(ErrorCode::BadRank, "r = " + std::to_string(r) + " is outside 1..m-1 for m = " + std::to_string(m));
  require_limited(s);

  EssentialReport rep;
  rep.r = r;
  const ExternalScalar det = ext_det(ExternalMatrix(s.A().topLeftCorner(r, r)), max_order);
  rep.conditions[0] = det.is_zeroless();

  EpsMatrix pb(m, n + 1);
  pb.leftCols(n) = representative(s.A());
  pb.col(n) = representative(s.B());
  rep.conditions[1] = rank(pb) == r;

  Neutrix top_b;
  for (Eigen::Index i = 0; i < r; ++i) top_b = ntx_sum(top_b, s.B()(i).neutrix());
  Neutrix bottom_b = Neutrix::full();
  for (Eigen::Index i = r; i < m; ++i) bottom_b = ntx_min(bottom_b, s.B()(i).neutrix());
  rep.conditions[2] = rep.conditions[0] && !is_absorber(det, top_b);
  rep.conditions[3] = top_b.subset_of(bottom_b);

  const MatrixStats stats = matrix_stats(s.A());
  rep.conditions[4] = true;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!stats.column_max_neutrix(s.A(), j, r, m).subset_of(stats.column_max_neutrix(s.A(), j, 0, r)))
      rep.conditions[4] = false;

  const bool all = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](bool b) { return b; });
  rep.verdict = all ? Verdict::Essential : Verdict::Inconclusive;
  return rep;
}

namespace {

// Rank condition of the essential-part test on the integrated system: row e_j of the
// constraint matrix must be c^T P, and then x_j = c^T b must lie in F_j.
bool constraints_implied(const FlexibleSystem& s) {
  const EpsMatrix Pt = representative(s.A()).transpose();
  const EpsVector b = representative(s.B());
  const auto f = feasibility_space(s);
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    const Neutrix& fj = f[static_cast<std::size_t>(j)];
    if (fj.is_full()) continue;
    const auto c = coordinates(Pt, EpsVector::Unit(s.cols(), j));
    if (!c || !fj.contains(c->dot(b))) return false;
  }
  return true;
}

}  // namespace

FeasibilityReport is_feasible_system(const FlexibleSystem& s, int max_order) {
  const Eigen::Index m = s.rows();
  const Eigen::Index n = s.cols();
  if (m > n) throw Error(ErrorCode::DimensionMismatch, "feasibility test needs m <= n");
  require_limited(s);

  FeasibilityReport rep;
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(m));
  std::iota(rows.begin(), rows.end(), 0);
  // Enumerate column subsets of size m via a selection mask.
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + m, true);
  bool first = true;
  do {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n; ++j)
      if (mask[static_cast<std::size_t>(j)]) cols.push_back(j);
    const ExternalScalar minor = ext_minor(s.A(), rows, cols, max_order);
    if (first || abs_less(rep.max_minor, minor)) rep.max_minor = minor.rep().sign() < 0 ? -minor : minor;
    first = false;
  } while (std::prev_permutation(mask.begin(), mask.end()));

  rep.max_minor_zeroless = rep.max_minor.is_zeroless();
  for (Eigen::Index i = 0; i < m; ++i) rep.max_rhs_neutrix = ntx_sum(rep.max_rhs_neutrix, s.B()(i).neutrix());
  rep.min_constraint = Neutrix::full();
  for (const Neutrix& f : feasibility_space(s)) rep.min_constraint = ntx_min(rep.min_constraint, f);
  rep.rhs_within_constraints = rep.max_rhs_neutrix.subset_of(rep.min_constraint);
  rep.minor_not_absorber = rep.max_minor_zeroless && !is_absorber(rep.max_minor, rep.max_rhs_neutrix);
  rep.constraints_implied = rep.max_minor_zeroless && constraints_implied(s);
  rep.verdict = rep.max_minor_zeroless && rep.rhs_within_constraints && rep.minor_not_absorber &&
                        rep.constraints_implied
                    ? Verdict::Feasible
                    : Verdict::Inconclusive;
  return rep;
}

bool RobustnessPreconditions::all() const {
  return det_not_absorber && det_plus_error_zeroless &&
         std::all_of(row_quotient_covers.begin(), row_quotient_covers.end(), [](bool b) { return b; });
}

namespace {

struct Setup {
  EpsScalar d;
  std::vector<EpsScalar> dj;
  Neutrix max_b;
};

Setup validate(const EpsMatrix& P, const ExternalVector& B, int max_order) {
  if (P.rows() != P.cols()) throw Error(ErrorCode::DimensionMismatch, "robustness needs a square matrix");
  if (P.rows() != B.size()) throw Error(ErrorCode::DimensionMismatch, "matrix and right-hand side differ in size");
  for (Eigen::Index i = 0; i < B.size(); ++i)
    if (B(i).neutrix().is_full())
      throw Error(ErrorCode::ValidationError, "right-hand neutrix of row " + std::to_string(i + 1) + " is R");

  Setup s;
  s.d = leibniz_determinant(P, max_order);
  if (s.d.is_zero()) throw Error(ErrorCode::Singular, "matrix is singular");
  for (Eigen::Index i = 0; i < B.size(); ++i) s.max_b = ntx_sum(s.max_b, B(i).neutrix());
  if (is_absorber(s.d, s.max_b))
    throw Error(ErrorCode::AbsorberDeterminant,
                "determinant " + s.d.str() + " absorbs the right-hand neutrix " + s.max_b.str());
  if (!is_reduced(to_external(P))) throw Error(ErrorCode::NotReduced, "matrix is not reduced");

  const EpsVector b = representative(B);
  for (Eigen::Index j = 0; j < P.cols(); ++j) {
    EpsMatrix mj = P;
    mj.col(j) = b;
    s.dj.push_back(leibniz_determinant(mj, max_order));
  }
  return s;
}

RobustnessReport finish(const EpsMatrix& P, const ExternalVector& B, const Setup& s, NeutrixMatrix E) {
  RobustnessReport rep;
  rep.d = s.d;
  rep.d_columns = s.dj;
  rep.E = std::move(E);
  rep.R = combine(P, rep.E);

  const Eigen::Index n = P.rows();
  Neutrix e_bar;
  rep.preconditions.det_not_absorber = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    Neutrix row;
    for (Eigen::Index j = 0; j < n; ++j) row = ntx_sum(row, rep.E(i, j));
    e_bar = ntx_sum(e_bar, row);
    rep.preconditions.row_quotient_covers.push_back(s.max_b.subset_of(ntx_div(B(i).neutrix(), row)));
  }
  rep.preconditions.det_plus_error_zeroless = ExternalScalar(s.d, e_bar).is_zeroless();

  for (std::size_t i = 0; i < rep.preconditions.row_quotient_covers.size(); ++i)
    if (!rep.preconditions.row_quotient_covers[i])
      throw Error(ErrorCode::PreconditionFailed,
                  "row " + std::to_string(i + 1) + ": B_i : max E_i does not contain max B");
  if (!rep.preconditions.det_plus_error_zeroless)
    throw Error(ErrorCode::PreconditionFailed, "d + max E is not zeroless");

  const FlexibleSystem original(to_external(P), B);
  const FlexibleSystem perturbed(rep.R, B);
  auto perturbed_solution = std::async(std::launch::async, [&] { return solve(perturbed); });
  const SolutionSet base = solve(original);
  rep.verified_equivalent = solution_equiv(base, perturbed_solution.get()) == Equivalence::Equal;
  return rep;
}

}  // namespace

RobustnessReport robustness_matrix(const EpsMatrix& P, const ExternalVector& B, int max_order) {
  const Setup s = validate(P, B, max_order);
  const Eigen::Index n = P.rows();
  const Neutrix cap = Neutrix::oslash();
  NeutrixMatrix E(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const EpsScalar& dj = s.dj[static_cast<std::size_t>(j)];
      E(i, j) = cap;
      if (dj.is_zero()) continue;
      const Neutrix cand = ntx_scale(s.d / dj, B(i).neutrix());
      if (cand < cap) E(i, j) = cand;
    }
  return finish(P, B, s, std::move(E));
}

RobustnessReport robustness_matrix_uniform(const EpsMatrix& P, const EpsVector& b, const Neutrix& B, int max_order) {
  if (b.size() != P.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix and right-hand side differ in size");
  ExternalVector rhs(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) rhs(i) = ExternalScalar(b(i), B);
  const Setup s = validate(P, rhs, max_order);
  const Eigen::Index n = P.rows();
  NeutrixMatrix E(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const EpsScalar& dj = s.dj[static_cast<std::size_t>(j)];
    const Neutrix col = dj.is_zero() ? Neutrix::oslash() : ntx_min(Neutrix::oslash(), ntx_scale(s.d / dj, B));
    for (Eigen::Index i = 0; i < n; ++i) E(i, j) = col;
  }
  return finish(P, rhs, s, std::move(E));
}

bool is_strict_perturbation(const EpsMatrix& P, const NeutrixMatrix& Qn, const ExternalVector& B) {
  if (P.rows() != Qn.rows() || P.cols() != Qn.cols())
    throw Error(ErrorCode::DimensionMismatch, "perturbation has the wrong shape");
  const FlexibleSystem original(to_external(P), B);
  const FlexibleSystem perturbed(combine(P, Qn), B);
  return solution_equiv(solve(original), solve(perturbed)) == Equivalence::Equal;
}

}  // namespace flex
