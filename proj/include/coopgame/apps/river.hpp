#pragma once

#include "coopgame/engine.hpp"

namespace coopgame {

/// A line of locations 1..n (agent i sits at location i, upstream of j iff
/// i < j). Water enters in integer units; benefits are per-unit marginal
/// values, strictly positive and strictly decreasing, with enough entries for
/// any agent to absorb the whole river.
struct RiverInstance {
  std::vector<int> entries;
  std::vector<std::vector<Rational>> marginal_benefits;  // [agent][unit]

  int agent_count() const { return static_cast<int>(entries.size()); }
  int total_water() const;
  Rational benefit(AgentId agent, long units) const;
  void validate() const;
};

/// Through-flow rights: S maximizes its benefit with access to every entry at
/// or above each member, only members consuming.
Rational river_unlimited(const RiverInstance& inst, Coalition s);
/// Own-entry rights: the coarsest split of S into consecutive blocks, each
/// block restricted to the water entering on its own territory.
Rational river_sovereignty(const RiverInstance& inst, Coalition s);
/// Arrive-last value: zero unless S contains the river mouth; otherwise the
/// trailing consecutive block keeps its own entries.
Rational river_last(const RiverInstance& inst, Coalition s);

struct RiverGames {
  TUGame unlimited, sovereignty, last, pessimistic;
  explicit RiverGames(int n) : unlimited(n), sovereignty(n), last(n), pessimistic(n) {}
};

/// All four games; the pessimistic one is computed by the staged engine and
/// checked against the arrive-last closed form (std::logic_error on mismatch).
RiverGames river_games(const RiverInstance& inst);

/// Maximal runs of consecutive members, upstream first.
std::vector<Coalition> consecutive_blocks(Coalition s);

/// y_i = unlimited({1..i}) - unlimited({1..i-1}); the same increments come out
/// of the sovereignty game, which is asserted.
Allocation downstream_incremental(const RiverInstance& inst);

/// Staged view. State: units already consumed per location. A move is an
/// integer consumption vector for the members, feasible against cumulative
/// remaining availability.
class RiverStaged : public StagedProblem {
 public:
  explicit RiverStaged(RiverInstance instance);

  int agent_count() const override { return instance_.agent_count(); }
  std::string initial_state() const override;
  std::vector<Move> moves(Coalition coalition, const std::string& state) const override;

 private:
  RiverInstance instance_;
};

}  // namespace coopgame
