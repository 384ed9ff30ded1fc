#pragma once

#include <array>
#include <vector>

#include "flex/solver.hpp"

namespace flex {

enum class Verdict { Essential, Feasible, Inconclusive };
const char* to_string(Verdict v);

struct EssentialReport {
  Eigen::Index r = 0;
  /// 1: leading r×r block non-singular; 2: canonical representative has rank r;
  /// 3: its determinant does not absorb the top right-hand neutrix;
  /// 4: top right-hand neutrices lie inside the bottom ones; 5: column neutrices peak in the top block.
  std::array<bool, 5> conditions{};
  Verdict verdict = Verdict::Inconclusive;
};

/// Whether the first r rows of `s` already determine its solution set.
EssentialReport essential_part_check(const FlexibleSystem& s, Eigen::Index r,
                                     int max_order = kDefaultMaxDetOrder);

struct FeasibilityReport {
  ExternalScalar max_minor;
  bool max_minor_zeroless = false;
  Neutrix max_rhs_neutrix;
  Neutrix min_constraint;  // R when nothing is constrained
  bool rhs_within_constraints = false;
  bool minor_not_absorber = false;
  /// Every constrained coordinate is determined by P x = b, at a value inside its F_j.
  bool constraints_implied = false;
  Verdict verdict = Verdict::Inconclusive;
};

/// Sufficient test for the system being equivalent to its representative part.
FeasibilityReport is_feasible_system(const FlexibleSystem& s, int max_order = kDefaultMaxDetOrder);

struct RobustnessPreconditions {
  bool det_not_absorber = false;
  std::vector<bool> row_quotient_covers;  // B_i : max_j E_ij ⊇ max B
  bool det_plus_error_zeroless = false;

  bool all() const;
};

struct RobustnessReport {
  NeutrixMatrix E;
  ExternalMatrix R;
  EpsScalar d;
  std::vector<EpsScalar> d_columns;  // Cramer determinants d_j
  RobustnessPreconditions preconditions;
  bool verified_equivalent = false;
};

/// Largest limited coefficient perturbation of P|B that keeps the solution set.
/// Throws Singular, AbsorberDeterminant, NotReduced or PreconditionFailed (checked in that order).
RobustnessReport robustness_matrix(const EpsMatrix& P, const ExternalVector& B,
                                   int max_order = kDefaultMaxDetOrder);

/// Uniform right-hand neutrix: every column of E is constant.
RobustnessReport robustness_matrix_uniform(const EpsMatrix& P, const EpsVector& b, const Neutrix& B,
                                           int max_order = kDefaultMaxDetOrder);

/// solve(P|B) equals solve((P+Qn)|B).
bool is_strict_perturbation(const EpsMatrix& P, const NeutrixMatrix& Qn, const ExternalVector& B);

}  // namespace flex
