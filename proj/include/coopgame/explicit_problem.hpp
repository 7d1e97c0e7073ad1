#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coopgame/engine.hpp"

namespace coopgame {

/// A finite problem in explicit form: per-agent action lists (index 0 is the
/// null action), the set of jointly feasible full profiles, and per-agent
/// revenues depending on the own action only. Per-coalition feasible sets are
/// always derived as slices of the grand set, so feasibility complementarity
/// holds by construction.
struct ExplicitProblem {
  std::vector<std::vector<std::string>> actions;   // [agent][index] labels
  std::vector<std::vector<Rational>> revenues;     // [agent][index]
  std::vector<std::vector<int>> feasible_profiles; // rows of length n

  int agent_count() const { return static_cast<int>(actions.size()); }

  /// Throws std::invalid_argument when malformed (no all-null profile,
  /// ragged tables, out-of-range indices).
  void validate() const;
};

/// Staged view: the state is the partial profile, pending agents at null.
class ExplicitStaged : public StagedProblem {
 public:
  explicit ExplicitStaged(const ExplicitProblem& problem);

  int agent_count() const override { return problem_->agent_count(); }
  std::string initial_state() const override;
  std::vector<Move> moves(Coalition coalition, const std::string& state) const override;

 private:
  const ExplicitProblem* problem_;
  std::set<std::vector<int>> feasible_;
};

struct ExplicitGames {
  TUGame alpha, beta, first, last_min, last_max;
  RealizedGame optimistic, pessimistic;

  explicit ExplicitGames(int n)
      : alpha(n), beta(n), first(n), last_min(n), last_max(n),
        optimistic{TUGame(n), std::vector<std::uint32_t>(coalition_count(n), 0)},
        pessimistic{TUGame(n), std::vector<std::uint32_t>(coalition_count(n), 0)} {}
};

/// All seven value functions evaluated straight from their definitions by
/// profile enumeration, independent of the staged engine. The two routes are
/// required to agree on every instance.
ExplicitGames explicit_games(const ExplicitProblem& problem);

struct ExternalityWitness {
  Coalition s;
  std::vector<int> outside_profile;  // full profile, S at null
  std::vector<int> affected;         // full profile whose S-slice changed
};

struct ExternalityClass {
  ExternalityTag tag = ExternalityTag::Mixed;
  bool ever_shrank = false;
  bool ever_grew = false;
  std::optional<ExternalityWitness> lost;    // a feasible S-action removed
  std::optional<ExternalityWitness> gained;  // a feasible S-action added
};

/// Exhaustive classification per the inclusion definitions. When outsiders'
/// actions never change a coalition's feasible set the problem belongs to
/// both classes and is tagged Negative.
ExternalityClass classify_externalities(const ExplicitProblem& problem);

}  // namespace coopgame
