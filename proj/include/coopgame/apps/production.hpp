#pragma once

#include "coopgame/engine.hpp"

namespace coopgame {

/// Discrete joint production: each agent consumes integer units of a common
/// good with non-increasing marginal utilities (zeros allowed; the list length
/// is the agent's consumption cap). The production cost of the k-th unit is
/// marginal_cost(k): an explicit prefix followed by a constant tail.
struct ProductionInstance {
  std::vector<std::vector<Rational>> marginal_utilities;  // [agent][unit]
  std::vector<Rational> marginal_cost_prefix;
  Rational marginal_cost_tail;

  int agent_count() const { return static_cast<int>(marginal_utilities.size()); }
  Rational marginal_cost(long unit) const;  // 1-based unit index
  Rational total_cost(long units) const;
  Rational utility(AgentId agent, long units) const;

  void validate() const;
};

/// Negative for non-decreasing marginal costs, Positive for non-increasing.
/// Throws std::domain_error when the cost schedule is neither.
ExternalityTag production_class(const ProductionInstance& instance);

/// Staged view. State: total units produced so far. A coalition move is a
/// per-member quantity vector within caps; the coalition pays exactly the
/// incremental production cost, attributed member by member in ascending
/// agent order.
class ProductionProblem : public StagedProblem {
 public:
  explicit ProductionProblem(ProductionInstance instance);

  const ProductionInstance& instance() const { return instance_; }
  int agent_count() const override { return instance_.agent_count(); }
  std::string initial_state() const override { return "0"; }
  std::vector<Move> moves(Coalition coalition, const std::string& state) const override;

 private:
  ProductionInstance instance_;
};

/// The two fixture instances used throughout the docs and tests: decreasing
/// returns (unit costs 0,1,2,...) and increasing returns (14,9,7,3,1,1,...),
/// both over the same three agents.
ProductionInstance production_decreasing_returns_fixture();
ProductionInstance production_increasing_returns_fixture();

}  // namespace coopgame
