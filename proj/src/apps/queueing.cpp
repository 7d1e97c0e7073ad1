#include "coopgame/apps/queueing.hpp"

#include "coopgame/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopgame {

void QueueingInstance::validate() const {
  if (waiting_costs.empty()) throw std::invalid_argument("need at least one agent");
  for (const auto& w : waiting_costs)
    if (w <= 0) throw std::invalid_argument("waiting costs must be positive");
}

std::vector<AgentId> service_order(const QueueingInstance& q, Coalition who) {
  std::vector<AgentId> order = who.members();
  std::stable_sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
    return q.waiting_costs[a] > q.waiting_costs[b];
  });
  return order;
}

namespace {

TUGame slot_game(const QueueingInstance& q, bool first, int jobs) {
  q.validate();
  const int n = q.agent_count();
  std::vector<Rational> vals(coalition_count(n), Rational(0));
  parallel_for(1, coalition_count(n), jobs, [&](std::uint32_t m) {
    const Coalition s(m);
    const auto order = service_order(q, s);
    const long offset = first ? 0 : n - s.size();
    Rational total(0);
    for (std::size_t k = 0; k < order.size(); ++k)
      total -= Rational(static_cast<long>(k) + 1 + offset) * q.waiting_costs[order[k]];
    vals[m] = std::move(total);
  });
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m)
    g.set_value(Coalition(m), std::move(vals[m]));
  return g;
}

}  // namespace

TUGame queueing_optimistic(const QueueingInstance& q, int jobs) {
  return slot_game(q, true, jobs);
}
TUGame queueing_pessimistic(const QueueingInstance& q, int jobs) {
  return slot_game(q, false, jobs);
}

Allocation minimal_transfer_rule(const QueueingInstance& q) {
  q.validate();
  const int n = q.agent_count();
  const auto order = service_order(q, Coalition::grand(n));
  Allocation out;
  out.payoffs.assign(n, Rational(0));
  for (int rank = 0; rank < n; ++rank) {
    const AgentId i = order[rank];
    Rational behind(0);
    for (int k = rank + 1; k < n; ++k) behind += q.waiting_costs[order[k]];
    out.payoffs[i] = -Rational(rank + 1) * q.waiting_costs[i] +
                     Rational(rank) * q.waiting_costs[i] / 2 - behind / 2;
  }
  return out;
}

Allocation maximal_transfer_rule(const QueueingInstance& q) {
  q.validate();
  const int n = q.agent_count();
  const auto order = service_order(q, Coalition::grand(n));
  Allocation out;
  out.payoffs.assign(n, Rational(0));
  for (int rank = 0; rank < n; ++rank) {
    const AgentId i = order[rank];
    Rational ahead(0);
    for (int k = 0; k < rank; ++k) ahead += q.waiting_costs[order[k]];
    out.payoffs[i] = -Rational(rank + 1) * q.waiting_costs[i] + ahead / 2 -
                     Rational(n - 1 - rank) * q.waiting_costs[i] / 2;
  }
  return out;
}

ExplicitProblem queueing_explicit(const QueueingInstance& q) {
  q.validate();
  const int n = q.agent_count();
  ExplicitProblem p;
  Rational big(1);
  for (const auto& w : q.waiting_costs) big += w;
  big *= n + 1;

  p.actions.resize(n);
  p.revenues.resize(n);
  for (int i = 0; i < n; ++i) {
    p.actions[i].push_back("out");
    p.revenues[i].push_back(-big);
    for (int t = 1; t <= n; ++t) {
      p.actions[i].push_back("t" + std::to_string(t));
      p.revenues[i].push_back(-Rational(t) * q.waiting_costs[i]);
    }
  }

  // All assignments of distinct periods to the served agents.
  std::vector<int> profile(n, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (profile[a] != 0 && profile[a] == profile[b]) ok = false;
    if (ok) p.feasible_profiles.push_back(profile);
    int k = n - 1;
    while (k >= 0) {
      if (++profile[k] <= n) break;
      profile[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return p;
}

}  // namespace coopgame
