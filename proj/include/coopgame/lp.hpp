#pragma once

#include <variant>
#include <vector>

#include "coopgame/rational.hpp"

namespace coopgame {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Variables are free (unbounded in sign); bounds go through constraints.
struct LinearProgram {
  int num_vars = 0;
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

struct LpOptimal {
  std::vector<Rational> point;
  Rational value;
};

/// Farkas certificate of infeasibility: one multiplier per constraint with
///   y_k >= 0 on GreaterEq rows, y_k <= 0 on LessEq rows, free on Equal rows,
///   sum_k y_k * a_k = 0  and  sum_k y_k * b_k > 0.
struct LpInfeasible {
  std::vector<Rational> multipliers;
};

/// Feasible point plus an improving ray: point + t*ray stays feasible for all
/// t >= 0 and the objective improves strictly along it.
struct LpUnbounded {
  std::vector<Rational> point;
  std::vector<Rational> ray;
};

using LpResult = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Exact rational two-phase simplex with Bland's least-index anti-cycling
/// rule. Every returned answer is re-verified by substitution before it is
/// handed back; a verification failure throws std::logic_error.
LpResult lp_solve(const LinearProgram& lp);

/// Substitution checks, exposed for tests.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);
bool valid_infeasibility_certificate(const LinearProgram& lp,
                                     const std::vector<Rational>& y);
bool valid_ray(const LinearProgram& lp, const std::vector<Rational>& point,
               const std::vector<Rational>& ray);

}  // namespace coopgame
