#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coopgame/tu_game.hpp"

namespace coopgame {

/// One joint move of a coalition at some state.
struct Move {
  std::string label;
  Rational payoff;                      // coalition total
  std::vector<Rational> member_payoffs; // per member, ascending agent order
  std::string successor;                // canonical serialized state
};

/// A finite optimization problem presented as coalition moves over an
/// evolving state. Payoffs accrue additively at move time; states are
/// canonical strings so identical states memoize.
///
/// Contract for implementations: moves() is called with nonempty coalitions
/// only, is deterministic, returns at least one move (a stay-inactive move is
/// always available), and member_payoffs line up with the coalition's members
/// in ascending agent order and sum to payoff.
class StagedProblem {
 public:
  virtual ~StagedProblem() = default;
  virtual int agent_count() const = 0;
  virtual std::string initial_state() const = 0;
  virtual std::vector<Move> moves(Coalition coalition, const std::string& state) const = 0;
};

enum class Mode { Min, Max };

enum class ExternalityTag { Negative, Positive, Mixed };

std::string to_string(ExternalityTag tag);

/// A game plus, per coalition, the first-moving subset realizing its value.
struct RealizedGame {
  TUGame game;
  std::vector<std::uint32_t> realizer;  // indexed by coalition mask
};

/// Evaluates the coalitional value functions of a staged problem. Lazily
/// caches maximizer sets, best responses and whole games; all evaluation is
/// deterministic (ascending coalition masks, adapter move order, label
/// tie-breaks).
class Engine {
 public:
  explicit Engine(const StagedProblem& problem);

  const StagedProblem& problem() const { return *problem_; }
  int agent_count() const { return n_; }
  Coalition grand() const { return Coalition::grand(n_); }

  /// Optimal grand-coalition move; ties broken by lexicographically-first label.
  const Move& grand_move();
  const Rational& grand_value();

  /// All moves of `coalition` at `state` attaining its best payoff.
  const std::vector<Move>& maximizer_set(Coalition coalition, const std::string& state);
  const Rational& best_value(Coalition coalition, const std::string& state);

  const TUGame& v_first();
  /// Minimax route; checked against v_first and returned.
  const TUGame& v_beta();
  const TUGame& v_alpha();
  const TUGame& v_last(Mode mode);
  /// Three-stage value: T moves, N\S best-responds (worst or best maximizer
  /// for the rest), S\T moves last. Requires T subset of S.
  Rational v_stage(Coalition t, Coalition s, Mode mode);
  const RealizedGame& v_optimistic();
  const RealizedGame& v_pessimistic();
  /// Every first-moving subset attaining the optimistic (Max) or pessimistic
  /// (Min) value of `s`, ascending. The games themselves record only the
  /// first one.
  std::vector<std::uint32_t> realizing_subsets(Coalition s, Mode mode);

 private:
  const std::vector<Move>& moves_of(Coalition coalition, const std::string& state);

  const StagedProblem* problem_;
  int n_;
  std::string initial_;
  std::unordered_map<std::string, std::vector<Move>> moves_memo_;
  std::unordered_map<std::string, std::vector<Move>> maximizer_memo_;
  std::unordered_map<std::string, Rational> best_memo_;
  std::optional<Move> grand_move_;
  std::optional<Rational> grand_value_;
  std::optional<TUGame> first_, beta_, alpha_, last_min_, last_max_;
  std::optional<RealizedGame> optimistic_, pessimistic_;
};

/// The full per-coalition report: all seven value functions plus realizing
/// first-mover subsets. Construction checks that every game assigns the same
/// grand-coalition value.
struct GameTable {
  int n = 0;
  TUGame alpha, beta, first, last_min, last_max, optimistic, pessimistic;
  std::vector<std::uint32_t> optimistic_subset, pessimistic_subset;

  GameTable() : alpha(1), beta(1), first(1), last_min(1), last_max(1),
                optimistic(1), pessimistic(1) {}
};

GameTable build_game_table(Engine& engine);

/// Per-agent payoffs under the optimal grand-coalition play, checked against
/// the anti-core of the first-mover game.
struct WitnessReport {
  Allocation x;
  bool in_anticore = false;
  std::optional<Coalition> violated;
};

WitnessReport anticore_witness(Engine& engine);

struct SequentialEfficiencyRow {
  Coalition s;
  bool sequential_efficient = false;  // some first-mover maximizer of S plus a
                                      // best response of N\S attains the optimum
  bool dual_min = false;              // v_first(S) + v_last_min(N\S) == v(N)
};

struct SequentialEfficiencyReport {
  std::vector<SequentialEfficiencyRow> rows;  // all proper S, ascending mask
  bool all_sequential = true;
  bool all_dual = true;
};

SequentialEfficiencyReport check_sequential_efficiency(Engine& engine);

struct AuditClaim {
  std::string name;
  bool holds = false;
  std::string detail;  // witness coalition / values on failure
};

struct AuditReport {
  ExternalityTag declared = ExternalityTag::Mixed;
  std::vector<AuditClaim> claims;
  bool all_hold = true;
};

/// Evaluates every ordering/identity/inclusion/non-emptiness claim applicable
/// to the declared externality class. A failing claim signals an
/// implementation bug, not a property of the instance.
AuditReport theorem_audit(Engine& engine, ExternalityTag declared);

}  // namespace coopgame
