#include "coopgame/instance_gen.hpp"

#include <algorithm>

namespace coopgame::gen {

long pick(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational pick_rational(Rng& rng, long lo, long hi, long max_den) {
  return rat(pick(rng, lo, hi), pick(rng, 1, max_den));
}

QueueingInstance queueing(Rng& rng, int max_agents) {
  QueueingInstance q;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  for (int i = 0; i < n; ++i)
    q.waiting_costs.push_back(pick_rational(rng, 1, 12, 3));
  return q;
}

ProductionInstance production(Rng& rng, int max_agents, bool increasing_returns) {
  ProductionInstance p;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  for (int i = 0; i < n; ++i) {
    const int cap = static_cast<int>(pick(rng, 1, 3));
    Rational u = Rational(pick(rng, 1, 12));
    std::vector<Rational> list;
    for (int k = 0; k < cap; ++k) {
      list.push_back(u);
      u = std::max(Rational(0), Rational(u - Rational(pick(rng, 0, 4))));
    }
    p.marginal_utilities.push_back(std::move(list));
  }
  const int prefix = static_cast<int>(pick(rng, 1, 4));
  Rational c = increasing_returns ? Rational(pick(rng, 4, 12)) : Rational(pick(rng, 0, 3));
  for (int k = 0; k < prefix; ++k) {
    p.marginal_cost_prefix.push_back(c);
    if (increasing_returns)
      c = std::max(Rational(0), Rational(c - Rational(pick(rng, 0, 3))));
    else
      c += Rational(pick(rng, 0, 3));
  }
  p.marginal_cost_tail =
      increasing_returns ? std::max(Rational(0), Rational(c - Rational(pick(rng, 0, 2))))
                         : Rational(c + Rational(pick(rng, 0, 2)));
  return p;
}

BankruptcyInstance bankruptcy(Rng& rng, int max_agents) {
  BankruptcyInstance b;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  Rational total(0);
  for (int i = 0; i < n; ++i) {
    b.claims.push_back(Rational(pick(rng, 1, 5)));
    total += b.claims.back();
  }
  // Keep the estate strictly under the claim total, on the claims' grid.
  b.estate = Rational(pick(rng, 0, total.get_num().get_si() - 1));
  return b;
}

AirportInstance airport(Rng& rng, int max_agents) {
  AirportInstance a;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  const int top = static_cast<int>(pick(rng, 1, 4));
  for (int i = 0; i < n; ++i) a.lengths.push_back(static_cast<int>(pick(rng, 1, top)));
  a.lengths[static_cast<std::size_t>(pick(rng, 0, n - 1))] = top;
  for (int k = 0; k < top; ++k)
    a.segment_costs.push_back(pick_rational(rng, 0, 6, 2));
  return a;
}

McstInstance mcst(Rng& rng, int max_agents) {
  McstInstance m;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  m.cost.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      m.cost[i][j] = m.cost[j][i] = pick_rational(rng, 0, 10, 2);
  return m;
}

RiverInstance river(Rng& rng, int max_agents, int max_total_water) {
  RiverInstance r;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  int left = std::max(n, max_total_water);
  for (int i = 0; i < n; ++i) {
    const int e = static_cast<int>(pick(rng, 0, std::min(3L, static_cast<long>(left))));
    r.entries.push_back(e);
    left -= e;
  }
  if (r.total_water() == 0) r.entries[static_cast<std::size_t>(pick(rng, 0, n - 1))] = 1;
  const int water = r.total_water();
  for (int i = 0; i < n; ++i) {
    // Strictly decreasing positive values, long enough to drink the river:
    // the per-unit drop is at most 3/2, so starting above 2*water stays safe.
    Rational top = Rational(2 * water) + Rational(pick(rng, 1, 6));
    std::vector<Rational> list;
    const Rational step = rat(pick(rng, 1, 2), pick(rng, 2, 3));
    for (int k = 0; k < water; ++k) {
      list.push_back(top);
      top -= step + rat(1, k + 2);
    }
    r.marginal_benefits.push_back(std::move(list));
  }
  return r;
}

ExplicitProblem explicit_problem(Rng& rng, int max_agents, int max_actions) {
  ExplicitProblem p;
  const int n = static_cast<int>(pick(rng, 1, max_agents));
  p.actions.resize(n);
  p.revenues.resize(n);
  for (int i = 0; i < n; ++i) {
    const int actions = static_cast<int>(pick(rng, 1, max_actions));
    for (int a = 0; a < actions; ++a) {
      p.actions[i].push_back(a == 0 ? "null" : "a" + std::to_string(a));
      p.revenues[i].push_back(a == 0 ? Rational(0) : pick_rational(rng, -6, 8, 2));
    }
  }
  // Random feasible set always containing the all-null profile.
  std::vector<int> profile(n, 0);
  while (true) {
    bool all_null = std::all_of(profile.begin(), profile.end(),
                                [](int a) { return a == 0; });
    if (all_null || pick(rng, 0, 2) > 0) p.feasible_profiles.push_back(profile);
    int k = n - 1;
    while (k >= 0) {
      if (++profile[k] < static_cast<int>(p.actions[k].size())) break;
      profile[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return p;
}

}  // namespace coopgame::gen
