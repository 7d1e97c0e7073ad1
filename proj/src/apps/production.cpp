#include "coopgame/apps/production.hpp"

#include <stdexcept>

namespace coopgame {

Rational ProductionInstance::marginal_cost(long unit) const {
  if (unit < 1) throw std::invalid_argument("unit index is 1-based");
  if (unit <= static_cast<long>(marginal_cost_prefix.size()))
    return marginal_cost_prefix[unit - 1];
  return marginal_cost_tail;
}

Rational ProductionInstance::total_cost(long units) const {
  Rational acc(0);
  const long prefix = static_cast<long>(marginal_cost_prefix.size());
  for (long k = 1; k <= std::min(units, prefix); ++k) acc += marginal_cost_prefix[k - 1];
  if (units > prefix) acc += Rational(units - prefix) * marginal_cost_tail;
  return acc;
}

Rational ProductionInstance::utility(AgentId agent, long units) const {
  Rational acc(0);
  for (long k = 0; k < units; ++k) acc += marginal_utilities[agent][k];
  return acc;
}

void ProductionInstance::validate() const {
  if (agent_count() < 1) throw std::invalid_argument("need at least one agent");
  for (const auto& list : marginal_utilities) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k] < 0) throw std::invalid_argument("marginal utilities must be nonnegative");
      if (k > 0 && list[k] > list[k - 1])
        throw std::invalid_argument("marginal utilities must be non-increasing");
    }
  }
  for (const auto& c : marginal_cost_prefix)
    if (c < 0) throw std::invalid_argument("marginal costs must be nonnegative");
  if (marginal_cost_tail < 0)
    throw std::invalid_argument("marginal costs must be nonnegative");
}

ExternalityTag production_class(const ProductionInstance& instance) {
  std::vector<Rational> costs = instance.marginal_cost_prefix;
  costs.push_back(instance.marginal_cost_tail);
  bool non_decreasing = true, non_increasing = true;
  for (std::size_t k = 1; k < costs.size(); ++k) {
    if (costs[k] < costs[k - 1]) non_decreasing = false;
    if (costs[k] > costs[k - 1]) non_increasing = false;
  }
  if (non_decreasing) return ExternalityTag::Negative;
  if (non_increasing) return ExternalityTag::Positive;
  throw std::domain_error("marginal costs are not monotone; no class declaration");
}

ProductionProblem::ProductionProblem(ProductionInstance instance)
    : instance_(std::move(instance)) {
  instance_.validate();
}

std::vector<Move> ProductionProblem::moves(Coalition coalition,
                                           const std::string& state) const {
  const long produced = std::stol(state);
  const auto members = coalition.members();
  std::vector<long> caps;
  for (AgentId i : members)
    caps.push_back(static_cast<long>(instance_.marginal_utilities[i].size()));

  std::vector<Move> out;
  std::vector<long> q(members.size(), 0);
  while (true) {
    Move mv;
    long total = produced;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Rational before = instance_.total_cost(total);
      total += q[k];
      const Rational share =
          instance_.utility(members[k], q[k]) - (instance_.total_cost(total) - before);
      mv.member_payoffs.push_back(share);
      mv.payoff += share;
      if (k) mv.label += ",";
      mv.label += std::to_string(q[k]);
    }
    mv.label = "q=" + mv.label;
    mv.successor = std::to_string(total);
    out.push_back(std::move(mv));

    int k = static_cast<int>(members.size()) - 1;
    while (k >= 0) {
      if (++q[k] <= caps[k]) break;
      q[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

ProductionInstance production_decreasing_returns_fixture() {
  ProductionInstance inst;
  auto pad = [](std::vector<Rational> head, std::size_t len) {
    while (head.size() < len) head.push_back(Rational(0));
    return head;
  };
  // Zero-padded caps let outsiders flood the technology; with unit costs
  // 0,1,2,... twelve junk units push the next marginal cost to 12, past every
  // marginal utility below.
  inst.marginal_utilities = {
      pad({rat(6), rat(3)}, 12),
      pad({rat(12), rat(6)}, 12),
      pad({rat(12), rat(8), rat(4)}, 12),
  };
  for (int k = 1; k <= 40; ++k) inst.marginal_cost_prefix.push_back(rat(k - 1));
  inst.marginal_cost_tail = rat(40);
  return inst;
}

ProductionInstance production_increasing_returns_fixture() {
  ProductionInstance inst;
  inst.marginal_utilities = {
      {rat(6), rat(3)},
      {rat(12), rat(6)},
      {rat(12), rat(8), rat(4)},
  };
  inst.marginal_cost_prefix = {rat(14), rat(9), rat(7), rat(3)};
  inst.marginal_cost_tail = rat(1);
  return inst;
}

}  // namespace coopgame
