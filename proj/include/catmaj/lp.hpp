#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catmaj/rational.hpp"

namespace catmaj::lp {

// max objective.x  s.t.  eq_rows.x = eq_rhs, le_rows.x <= le_rhs,
// x_k >= lower_bounds[k] (nullopt = free variable).
// No objective means a pure feasibility problem.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::optional<std::vector<Rational>> objective;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> le_rows;
  std::vector<Rational> le_rhs;
  // Defaults to all-zero lower bounds when empty.
  std::vector<std::optional<Rational>> lower_bounds;

  void add_eq(std::vector<Rational> row, Rational rhs);
  void add_le(std::vector<Rational> row, Rational rhs);
  void validate() const;
};

enum class LpStatus { Feasible, Optimal, Infeasible, Unbounded };

// Multipliers proving infeasibility: eq_mult free, le_mult >= 0,
// bound_mult >= 0 (for x_k >= l_k rows), with
//   eq_mult.A + le_mult.G - bound_mult == 0   and
//   eq_mult.b + le_mult.h - bound_mult.l < 0.
struct FarkasCertificate {
  std::vector<Rational> eq_mult;
  std::vector<Rational> le_mult;
  std::vector<Rational> bound_mult;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;            // feasible/optimal solutions
  std::optional<Rational> value;          // objective value when optimal
  std::optional<FarkasCertificate> farkas;
  std::size_t pivots = 0;

  bool feasible() const {
    return status == LpStatus::Feasible || status == LpStatus::Optimal ||
           status == LpStatus::Unbounded;
  }
};

struct LpConfig {
  std::size_t max_pivots = 1'000'000;
};

// Exact primal simplex, Bland's anti-cycling rule, dense rational tableau.
// Throws resource_limit_error when the pivot cap is hit.
LpOutcome solve(const LinearProgram& prog, const LpConfig& config = {});

// Re-checks an answer by exact substitution.
bool verify_point(const LinearProgram& prog, const std::vector<Rational>& x);
bool verify_farkas(const LinearProgram& prog, const FarkasCertificate& cert);

// Solves A.x = rhs by exact Gaussian elimination. Returns nullopt when the
// system is singular/inconsistent. A must be square.
std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> a, std::vector<Rational> rhs);

}  // namespace catmaj::lp
