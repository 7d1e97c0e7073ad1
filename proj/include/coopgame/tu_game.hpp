#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coopgame/coalition.hpp"
#include "coopgame/rational.hpp"

namespace coopgame {

/// A transferable-utility game: one exact rational value per coalition,
/// v(empty) == 0. Values are immutable after construction except through
/// set_value, and agent count is capped at 16 (2^n storage).
class TUGame {
 public:
  static constexpr int kMaxAgents = 16;

  explicit TUGame(int n);

  int agent_count() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }

  const Rational& value(Coalition s) const { return values_[s.mask()]; }
  const Rational& value(std::uint32_t mask) const { return values_[mask]; }
  void set_value(Coalition s, Rational v);

  friend bool operator==(const TUGame&, const TUGame&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

/// A payoff vector, one rational per agent.
struct Allocation {
  std::vector<Rational> payoffs;

  int size() const { return static_cast<int>(payoffs.size()); }
  /// x(S) = sum of member payoffs; x(empty) = 0.
  Rational total(Coalition s) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Shapley value, computed with exact factorial weights. Sums to v(N).
Allocation shapley(const TUGame& game);

/// Dual game v*(S) = v(N) - v(N\S). An involution.
TUGame dual_game(const TUGame& game);

struct ConvexityWitness {
  AgentId agent;      // i
  Coalition smaller;  // S
  Coalition larger;   // T, with S subset T subset N\{i}
};

struct ConvexityResult {
  bool holds = false;
  std::optional<ConvexityWitness> witness;  // first violation in scan order
};

/// v(T u {i}) - v(T) >= v(S u {i}) - v(S) for all i, S subset T subset N\{i}.
ConvexityResult is_convex(const TUGame& game);
/// Mirror of is_convex with <=.
ConvexityResult is_concave(const TUGame& game);

enum class GameOrder { Equal, LessEq, GreaterEq, Incomparable };

struct GameComparison {
  GameOrder order = GameOrder::Equal;
  // First coalition (ascending mask) where g1 < g2, resp. g1 > g2.
  std::optional<Coalition> lower_witness;
  std::optional<Coalition> higher_witness;
};

/// Coalition-wise comparison over all S. Throws on dimension mismatch.
GameComparison game_compare(const TUGame& g1, const TUGame& g2);

/// theta*g1 + (1-theta)*g2, coalition-wise. Requires 0 <= theta <= 1.
TUGame weighted_game(const TUGame& g1, const TUGame& g2, const Rational& theta);

/// Marginal vector along `order`: the k-th agent in order receives
/// v(first k) - v(first k-1). Payoffs sum to v(N).
Allocation marginal_vector(const TUGame& game, std::span<const AgentId> order);

}  // namespace coopgame
