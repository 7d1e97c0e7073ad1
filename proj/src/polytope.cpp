#include "coopgame/polytope.hpp"

#include <stdexcept>

namespace coopgame {

namespace {

// Rows 0..2^n-3 are the proper nonempty coalitions in ascending mask order,
// the last row is the efficiency equality.
LinearProgram polytope_lp(const TUGame& game, bool core) {
  const int n = game.agent_count();
  LinearProgram lp;
  lp.num_vars = n;
  lp.objective.assign(n, Rational(0));
  const std::uint32_t grand = coalition_count(n) - 1;
  for (std::uint32_t m = 1; m <= grand; ++m) {
    LinearConstraint c;
    c.coeffs.assign(n, Rational(0));
    for (AgentId i : Coalition(m).members()) c.coeffs[i] = 1;
    c.rhs = game.value(Coalition(m));
    c.rel = m == grand ? Relation::Equal
                       : (core ? Relation::GreaterEq : Relation::LessEq);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

CoreReport polytope_nonempty(const TUGame& game, bool core) {
  const int n = game.agent_count();
  LpResult res = lp_solve(polytope_lp(game, core));
  CoreReport out;
  if (const auto* opt = std::get_if<LpOptimal>(&res)) {
    out.nonempty = true;
    out.point = Allocation{opt->point};
    return out;
  }
  const auto& bad = std::get<LpInfeasible>(res);
  // Normalize the Farkas multipliers into balanced weights. With y_S the
  // multiplier on coalition S and y_N on the efficiency row, the certificate
  // identities force sum_{S ni i} y_S = -y_N for every agent, so dividing by
  // -y_N (core) resp. y_N (anti-core) lands each agent's weights at 1.
  const auto& y = bad.multipliers;
  const std::uint32_t grand = coalition_count(n) - 1;
  const Rational y_grand = y.back();
  const Rational scale = core ? -y_grand : y_grand;
  if (scale <= 0)
    throw std::logic_error("unexpected sign on efficiency-row multiplier");
  BalancedWeights w;
  w.n = n;
  for (std::uint32_t m = 1; m < grand; ++m) {
    const Rational& ym = y[m - 1];
    if (ym == 0) continue;
    w.weights[m] = (core ? ym : -ym) / scale;
  }
  if (!weights_are_balanced(w))
    throw std::logic_error("certificate normalization failed");
  const Rational gap = weighted_value(w, game) - game.value(game.grand());
  if (core ? gap <= 0 : gap >= 0)
    throw std::logic_error("certificate does not violate balancedness");
  out.nonempty = false;
  out.certificate = std::move(w);
  return out;
}

MembershipResult membership(const TUGame& game, const Allocation& x, bool core) {
  if (x.size() != game.agent_count())
    throw std::invalid_argument("allocation length does not match game");
  MembershipResult out;
  const std::uint32_t grand = coalition_count(game.agent_count()) - 1;
  if (x.total(Coalition(grand)) != game.value(Coalition(grand))) {
    out.violated = Coalition(grand);
    return out;
  }
  for (std::uint32_t m = 1; m < grand; ++m) {
    const Coalition s(m);
    const Rational xs = x.total(s);
    const bool bad = core ? xs < game.value(s) : xs > game.value(s);
    if (bad) {
      out.violated = s;
      return out;
    }
  }
  out.member = true;
  return out;
}

}  // namespace

bool weights_are_balanced(const BalancedWeights& w) {
  for (const auto& [mask, lambda] : w.weights) {
    if (mask == 0 || mask >= coalition_count(w.n)) return false;
    if (lambda < 0 || lambda > 1) return false;
  }
  for (AgentId i = 0; i < w.n; ++i) {
    Rational sum(0);
    for (const auto& [mask, lambda] : w.weights)
      if ((mask >> i) & 1u) sum += lambda;
    if (sum != 1) return false;
  }
  return true;
}

Rational weighted_value(const BalancedWeights& w, const TUGame& game) {
  Rational acc(0);
  for (const auto& [mask, lambda] : w.weights)
    acc += lambda * game.value(Coalition(mask));
  return acc;
}

MembershipResult core_membership(const TUGame& game, const Allocation& x) {
  return membership(game, x, true);
}

MembershipResult anti_core_membership(const TUGame& game, const Allocation& x) {
  return membership(game, x, false);
}

CoreReport core_nonempty(const TUGame& game) { return polytope_nonempty(game, true); }

CoreReport anti_core_nonempty(const TUGame& game) {
  return polytope_nonempty(game, false);
}

InclusionReport inclusion_anticore_in_core(const TUGame& v1, const TUGame& v2,
                                           bool with_lp_check) {
  if (v1.agent_count() != v2.agent_count())
    throw std::invalid_argument("inclusion check: agent counts differ");
  const int n = v1.agent_count();
  if (v1.value(v1.grand()) != v2.value(v2.grand()))
    throw std::invalid_argument("inclusion check: grand values differ");

  InclusionReport out;
  out.holds = true;
  const Rational grand = v1.value(v1.grand());
  for (std::uint32_t m = 0; m < coalition_count(n); ++m) {
    const Coalition s(m);
    if (grand < v1.value(s) + v2.value(s.complement(n))) {
      out.holds = false;
      out.violating = s;
      break;
    }
  }

  if (with_lp_check) {
    bool lp_ok = true;
    CoreReport anti = anti_core_nonempty(v1);
    if (anti.nonempty) {
      for (std::uint32_t m = 1; m < coalition_count(n) - 1 && lp_ok; ++m) {
        std::vector<Rational> obj(n, Rational(0));
        for (AgentId i : Coalition(m).members()) obj[i] = 1;
        auto lo = optimize_over_anticore(v1, obj, Sense::Minimize);
        if (!lo) throw std::logic_error("anti-core emptied between two solves");
        if (lo->value < v2.value(Coalition(m))) lp_ok = false;
      }
    }
    out.lp_holds = lp_ok;
    out.checks_disagree = lp_ok != out.holds;
  }
  return out;
}

DualityReport duality_check(const TUGame& v1, const TUGame& v2) {
  if (v1.agent_count() != v2.agent_count())
    throw std::invalid_argument("duality check: agent counts differ");
  DualityReport out;
  const TUGame d = dual_game(v1);
  for (std::uint32_t m = 0; m < coalition_count(v1.agent_count()); ++m)
    if (d.value(Coalition(m)) != v2.value(Coalition(m))) {
      out.witness = Coalition(m);
      return out;
    }
  out.dual = true;
  return out;
}

namespace {

std::optional<LpOptimal> optimize(const TUGame& game, const std::vector<Rational>& obj,
                                  Sense sense, bool core) {
  LinearProgram lp = polytope_lp(game, core);
  lp.sense = sense;
  lp.objective = obj;
  LpResult res = lp_solve(lp);
  if (const auto* opt = std::get_if<LpOptimal>(&res)) return *opt;
  if (std::holds_alternative<LpUnbounded>(res))
    throw std::logic_error("core polytopes are bounded; unbounded LP signals a bug");
  return std::nullopt;
}

}  // namespace

std::optional<LpOptimal> optimize_over_core(const TUGame& game,
                                            const std::vector<Rational>& objective,
                                            Sense sense) {
  return optimize(game, objective, sense, true);
}

std::optional<LpOptimal> optimize_over_anticore(const TUGame& game,
                                                const std::vector<Rational>& objective,
                                                Sense sense) {
  return optimize(game, objective, sense, false);
}

}  // namespace coopgame
