#pragma once

#include "coopgame/explicit_problem.hpp"

namespace coopgame {

/// One machine, one job per agent, linear waiting cost w_i > 0 per period.
struct QueueingInstance {
  std::vector<Rational> waiting_costs;

  int agent_count() const { return static_cast<int>(waiting_costs.size()); }
  void validate() const;
};

/// Members of `who`, sorted by non-increasing waiting cost, ties by agent
/// index. This is the service order used by every closed form below.
std::vector<AgentId> service_order(const QueueingInstance& q, Coalition who);

/// Serve-first game: S occupies periods 1..|S|.
TUGame queueing_optimistic(const QueueingInstance& q, int jobs = 1);
/// Serve-last game: S occupies periods |N\S|+1..|N|.
TUGame queueing_pessimistic(const QueueingInstance& q, int jobs = 1);

/// Closed-form transfer rules; equal to the Shapley values of the serve-first
/// and serve-last games respectively.
Allocation minimal_transfer_rule(const QueueingInstance& q);
Allocation maximal_transfer_rule(const QueueingInstance& q);

/// Slot-choice explicit encoding: an action is a period (or staying out, at a
/// prohibitive cost); profiles are feasible when no period is taken twice.
ExplicitProblem queueing_explicit(const QueueingInstance& q);

}  // namespace coopgame
