#pragma once

#include <map>
#include <optional>

#include "coopgame/lp.hpp"
#include "coopgame/tu_game.hpp"

namespace coopgame {

/// Balanced weights: lambda_S in [0,1] for nonempty coalitions with, for every
/// agent i, sum over S containing i of lambda_S equal to exactly 1.
struct BalancedWeights {
  int n = 0;
  std::map<std::uint32_t, Rational> weights;  // nonzero entries only

  Rational at(Coalition s) const {
    auto it = weights.find(s.mask());
    return it == weights.end() ? Rational(0) : it->second;
  }
};

/// Structural check: nonnegative weights on nonempty coalitions, per-agent
/// sums exactly 1.
bool weights_are_balanced(const BalancedWeights& w);

/// sum_S lambda_S v(S), over nonempty proper and improper S alike.
Rational weighted_value(const BalancedWeights& w, const TUGame& game);

struct MembershipResult {
  bool member = false;
  std::optional<Coalition> violated;  // lexicographically-first violated constraint
};

/// x in C(v): x(N)=v(N) and x(S) >= v(S) for all proper S.
MembershipResult core_membership(const TUGame& game, const Allocation& x);
/// x in A(v): x(N)=v(N) and x(S) <= v(S) for all proper S.
MembershipResult anti_core_membership(const TUGame& game, const Allocation& x);

struct CoreReport {
  bool nonempty = false;
  std::optional<Allocation> point;            // present iff nonempty
  std::optional<BalancedWeights> certificate; // present iff empty
};

/// Feasibility of {x(S) >= v(S) for all S, x(N) = v(N)}; on emptiness the LP
/// dual is normalized into balanced weights with sum lambda_S v(S) > v(N).
CoreReport core_nonempty(const TUGame& game);
/// Mirror: reversed inequalities; certificate has sum lambda_S v(S) < v(N).
CoreReport anti_core_nonempty(const TUGame& game);

struct InclusionReport {
  bool holds = false;                  // primary sum test verdict
  std::optional<Coalition> violating;  // first S with v1(N) < v1(S) + v2(N\S)
  std::optional<bool> lp_holds;        // secondary LP verdict, when requested
  bool checks_disagree = false;
};

/// Does A(v1) lie inside C(v2)? Primary test: v1(N) >= v1(S) + v2(N\S) for
/// every S. The secondary LP test minimizes x(S) over A(v1) per coalition and
/// is vacuously true when A(v1) is empty; disagreement between the two is
/// surfaced, not resolved.
InclusionReport inclusion_anticore_in_core(const TUGame& v1, const TUGame& v2,
                                           bool with_lp_check = false);

struct DualityReport {
  bool dual = false;
  std::optional<Coalition> witness;  // first S with v2(S) != v1(N) - v1(N\S)
};

DualityReport duality_check(const TUGame& v1, const TUGame& v2);

/// Optimize a linear objective over C(v) or A(v); nullopt when the polytope is
/// empty. Exposed so callers can sample extreme points.
std::optional<LpOptimal> optimize_over_core(const TUGame& game,
                                            const std::vector<Rational>& objective,
                                            Sense sense);
std::optional<LpOptimal> optimize_over_anticore(const TUGame& game,
                                                const std::vector<Rational>& objective,
                                                Sense sense);

}  // namespace coopgame
