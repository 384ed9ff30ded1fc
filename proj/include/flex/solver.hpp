#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flex/ext_linalg.hpp"

namespace flex {

/// A x ⊆ B with external coefficients. Right-hand neutrices must differ from R.
class FlexibleSystem {
 public:
  FlexibleSystem(ExternalMatrix a, ExternalVector b, std::vector<std::string> names = {});

  const ExternalMatrix& A() const { return a_; }
  const ExternalVector& B() const { return b_; }
  const std::vector<std::string>& names() const { return names_; }
  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }

  friend bool operator==(const FlexibleSystem& x, const FlexibleSystem& y);

 private:
  ExternalMatrix a_;
  ExternalVector b_;
  std::vector<std::string> names_;
};

/// Representative system with the constraint rows appended below the original m rows.
struct IntegratedSystem {
  EpsMatrix P;
  ExternalVector rhs;
  Eigen::Index m = 0;
  std::vector<Eigen::Index> constrained_columns;  // j_h, increasing
  std::vector<Neutrix> F_constraint;               // F_{j_h}

  Eigen::Index k() const { return static_cast<Eigen::Index>(constrained_columns.size()); }
};

struct EchelonSystem {
  EpsMatrix Q;
  ExternalVector C;
  /// perm[k] is the original (0-based) column carried by the k-th echelon column.
  std::vector<Eigen::Index> perm;
  Eigen::Index r = 0;
  /// Integrated-system row that ended up in each echelon row.
  std::vector<Eigen::Index> row_origin;
};

struct ConsistencyResult {
  bool consistent = true;
  std::vector<Eigen::Index> offending_rows;  // echelon rows (0-based) with zeroless rhs
};

struct ModularGenerator {
  Neutrix neutrix;
  EpsVector direction;
};

enum class SolutionStatus { Consistent, Inconsistent };

/// support + sum N_i v_i + sum R w_j, or the empty set.
struct SolutionSet {
  SolutionStatus status = SolutionStatus::Consistent;
  EpsVector support;
  std::vector<ModularGenerator> modular;
  std::vector<EpsVector> linear;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> permutation;
  std::vector<Eigen::Index> offending_rows;
  std::vector<ExternalScalar> offending_values;

  bool consistent() const { return status == SolutionStatus::Consistent; }
  Eigen::Index dimension() const { return support.size(); }
};

std::vector<Neutrix> feasibility_space(const FlexibleSystem& s);

IntegratedSystem integrate(const FlexibleSystem& s);
/// Same, with an explicit representative matrix (each entry must lie in its coefficient).
IntegratedSystem integrate(const FlexibleSystem& s, const EpsMatrix& representative);

EchelonSystem to_increasing_echelon(const IntegratedSystem& sys);
ConsistencyResult consistency_check(const EchelonSystem& e);
SolutionSet solve_closed_form(const EchelonSystem& e);
SolutionSet solve(const FlexibleSystem& s);
/// Solve with a chosen representative matrix instead of the canonical one.
SolutionSet solve(const FlexibleSystem& s, const EpsMatrix& representative);

/// Matrix whose columns are the modular directions followed by the linear ones.
EpsMatrix generator_basis(const SolutionSet& z);

bool solution_membership(const SolutionSet& z, const EpsVector& x);
SolutionSet canonicalize_solution(const SolutionSet& z);

enum class Equivalence { Equal, FirstInSecond, SecondInFirst, Incomparable };
const char* to_string(Equivalence e);

/// Set inclusion z1 ⊆ z2.
bool solution_subset(const SolutionSet& z1, const SolutionSet& z2);
Equivalence solution_equiv(const SolutionSet& z1, const SolutionSet& z2);

/// Basis of the linear part, one vector per row, in reduced row-echelon form.
EpsMatrix linear_part(const SolutionSet& z);
Eigen::Index modular_dimension(const SolutionSet& z);

}  // namespace flex
