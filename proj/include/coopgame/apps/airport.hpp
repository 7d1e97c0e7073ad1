#pragma once

#include "coopgame/explicit_problem.hpp"

namespace coopgame {

/// A single runway shared by agents needing lengths l_i >= 1; building segment
/// k costs segment_costs[k-1] >= 0, so the cumulative cost is non-decreasing.
struct AirportInstance {
  std::vector<int> lengths;
  std::vector<Rational> segment_costs;  // size >= max length

  int agent_count() const { return static_cast<int>(lengths.size()); }
  int max_length() const;
  Rational cumulative_cost(int length) const;

  void validate() const;
};

/// Build-first game: v(S) = -c(max length in S).
TUGame airport_first(const AirportInstance& a);
/// Arrive-last game: v(S) = -(c(max length in N) - c(max length in N\S)),
/// with the empty maximum read as length 0. Dual of the build-first game.
TUGame airport_last(const AirportInstance& a);

/// Runway-prefix explicit encoding: an action builds a prefix of the runway
/// (possibly length 0, free-riding); a profile is feasible when every active
/// agent's required length is covered by the longest built prefix.
ExplicitProblem airport_explicit(const AirportInstance& a);

/// Staged view. State: currently built length. A move extends the runway to
/// any target covering the coalition's requirements; the extension cost is
/// charged to the first member with the longest requirement.
class AirportStaged : public StagedProblem {
 public:
  explicit AirportStaged(AirportInstance instance);

  int agent_count() const override { return instance_.agent_count(); }
  std::string initial_state() const override { return "0"; }
  std::vector<Move> moves(Coalition coalition, const std::string& state) const override;

 private:
  AirportInstance instance_;
};

}  // namespace coopgame
