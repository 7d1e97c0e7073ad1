#pragma once

#include "coopgame/explicit_problem.hpp"

namespace coopgame {

/// An estate E shared by claimants whose claims sum to more than E.
struct BankruptcyInstance {
  Rational estate;
  std::vector<Rational> claims;

  int agent_count() const { return static_cast<int>(claims.size()); }
  void validate() const;
};

/// Grab-first game: v(S) = min(c(S), E).
TUGame bankruptcy_first(const BankruptcyInstance& b);
/// Arrive-last game: v(S) = max(E - c(N\S), 0). Dual of the grab-first game.
TUGame bankruptcy_last(const BankruptcyInstance& b);

/// Explicit encoding on the grid of gcd(E, claims): an action is the amount
/// taken, profiles are feasible while the estate is not overdrawn.
ExplicitProblem bankruptcy_explicit(const BankruptcyInstance& b);

}  // namespace coopgame
