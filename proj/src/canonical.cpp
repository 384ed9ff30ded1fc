#include <algorithm>

#include "flex/solver.hpp"

namespace flex {

namespace {

Eigen::Index leading_column(const EpsVector& row) {
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (!row(j).is_zero()) return j;
  return -1;
}

bool is_zero_vector(const EpsVector& v) {
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!v(j).is_zero()) return false;
  return true;
}

// Least valuation t with eps^t * np ⊆ nq, for scaled neutrices.
int absorption_threshold(const Neutrix& np, const Neutrix& nq) {
  int t = nq.order() - np.order();
  if (np.kind() == Neutrix::Kind::Pound && nq.kind() == Neutrix::Kind::Oslash) ++t;
  return t;
}

struct Pivot {
  ModularGenerator gen;
  Eigen::Index col;
};

}  // namespace

SolutionSet canonicalize_solution(const SolutionSet& z) {
  if (!z.consistent()) return z;
  const Eigen::Index n = z.dimension();

  SolutionSet out;
  out.status = z.status;
  out.rank = z.rank;
  out.permutation = z.permutation;

  // Linear span, in reduced row-echelon form.
  std::vector<EpsVector> lin = z.linear;
  std::vector<ModularGenerator> mods;
  for (const auto& g : z.modular) {
    if (g.neutrix.is_zero() || is_zero_vector(g.direction)) continue;
    if (g.neutrix.is_full())
      lin.push_back(g.direction);
    else
      mods.push_back(g);
  }
  EpsMatrix rows(static_cast<Eigen::Index>(lin.size()), n);
  for (std::size_t i = 0; i < lin.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = lin[i].transpose();
  const EpsMatrix rref = rref_rows(rows);
  std::vector<Eigen::Index> lin_cols;
  for (Eigen::Index i = 0; i < rref.rows(); ++i) {
    out.linear.push_back(rref.row(i).transpose());
    lin_cols.push_back(leading_column(out.linear.back()));
  }

  auto reduce_linear = [&](EpsVector& v) {
    for (std::size_t i = 0; i < lin_cols.size(); ++i) {
      const EpsScalar c = v(lin_cols[i]);
      if (!c.is_zero()) v -= c * out.linear[i];
    }
  };

  for (auto& g : mods) reduce_linear(g.direction);
  std::erase_if(mods, [](const ModularGenerator& g) { return is_zero_vector(g.direction); });

  // Right-to-left sweep; the generator with the widest coordinate module at a column becomes its pivot.
  std::vector<Pivot> pivots;
  for (Eigen::Index j = n - 1; j >= 0 && !mods.empty(); --j) {
    std::optional<std::size_t> best;
    Neutrix best_mod;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const EpsScalar& c = mods[i].direction(j);
      if (c.is_zero()) continue;
      const Neutrix m = ntx_scale(c, mods[i].neutrix);
      if (!best || best_mod < m) {
        best = i;
        best_mod = m;
      }
    }
    if (!best) continue;
    ModularGenerator p = mods[*best];
    mods.erase(mods.begin() + static_cast<std::ptrdiff_t>(*best));
    const EpsScalar pv = p.direction(j);
    for (auto& g : mods) {
      const EpsScalar c = g.direction(j);
      if (!c.is_zero()) g.direction -= (c / pv) * p.direction;
    }
    p.direction *= pv.inverse();
    p.neutrix = best_mod;
    pivots.push_back({p, j});
  }

  // Clear what each pivot's module can absorb at later pivot columns.
  for (std::size_t a = 0; a < pivots.size(); ++a)
    for (std::size_t b = a + 1; b < pivots.size(); ++b) {
      EpsVector& v = pivots[a].gen.direction;
      const EpsScalar c = v(pivots[b].col);
      if (c.is_zero()) continue;
      const int t = absorption_threshold(pivots[a].gen.neutrix, pivots[b].gen.neutrix);
      const EpsScalar absorbed = c - c.truncated_below(t);
      if (!absorbed.is_zero()) v -= absorbed * pivots[b].gen.direction;
    }

  out.support = z.support;
  reduce_linear(out.support);
  for (const auto& p : pivots) {
    const EpsScalar c = out.support(p.col);
    const EpsScalar absorbed = c - ExternalScalar(c, p.gen.neutrix).rep();
    if (!absorbed.is_zero()) out.support -= absorbed * p.gen.direction;
  }

  std::stable_sort(pivots.begin(), pivots.end(),
                   [](const Pivot& x, const Pivot& y) { return x.gen.neutrix < y.gen.neutrix; });
  for (auto& p : pivots) out.modular.push_back(std::move(p.gen));
  return out;
}

}  // namespace flex
