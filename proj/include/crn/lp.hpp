#pragma once

#include "crn/linalg.hpp"
#include "crn/rational.hpp"

#include <optional>
#include <vector>

namespace crn {

enum class VarKind { Free, NonNegative, Zero };

/// { x : eq_rows x = rhs, x_j >= 0 for NonNegative j, x_j = 0 for Zero j,
///   normalization . x = 1 (if present) }.
struct LinearSystem {
  RationalMatrix eq_rows;
  RationalVector rhs;
  std::vector<VarKind> kinds;
  std::optional<RationalVector> normalization;

  LinearSystem() = default;
  /// n variables, all non-negative, no constraints yet.
  explicit LinearSystem(int num_vars);

  int num_vars() const noexcept { return static_cast<int>(kinds.size()); }
  void add_equation(std::span<const Rational> coefficients, const Rational& value);
  void set_free(int var);
  /// Zero dominates: a variable fixed at zero stays fixed.
  void set_nonnegative(int var);
  void set_zero(int var);

  /// Equations with the normalization appended as a last row (rhs 1).
  RationalMatrix all_rows() const;
  RationalVector all_rhs() const;
};

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  /// Basic feasible solution when Feasible.
  RationalVector witness;
  /// Farkas multipliers y (one per row of all_rows()) when Infeasible:
  /// y.b < 0, (y^T M)_j >= 0 for non-negative j and = 0 for free j.
  RationalVector certificate;

  bool feasible() const noexcept { return status == Feasibility::Feasible; }
};

/// Phase-one simplex over exact rationals with Bland's rule.
FeasibilityResult feasible(const LinearSystem& sys);

bool verify_witness(const LinearSystem& sys, std::span<const Rational> x);
bool verify_certificate(const LinearSystem& sys, std::span<const Rational> y);

/// Dimension of the affine hull of the feasible set; nullopt when empty.
std::optional<int> affine_dim(const LinearSystem& sys);

/// Process-wide count of simplex solves and of results that re-verified
/// exactly. Every solve verifies itself before returning.
struct SolveCounters {
  long long solves = 0;
  long long verified = 0;
};
SolveCounters solve_counters();
void reset_solve_counters();

}  // namespace crn
