#include "coopgame/tu_game.hpp"

#include <stdexcept>

namespace coopgame {

TUGame::TUGame(int n) : n_(n) {
  if (n < 1 || n > kMaxAgents)
    throw std::invalid_argument("agent count must be in [1, 16]");
  values_.assign(coalition_count(n), Rational(0));
}

void TUGame::set_value(Coalition s, Rational v) {
  if (s.mask() >= values_.size()) throw std::invalid_argument("coalition out of range");
  if (s.is_empty() && v != 0)
    throw std::invalid_argument("the empty coalition must have value 0");
  values_[s.mask()] = std::move(v);
}

Rational Allocation::total(Coalition s) const {
  Rational sum(0);
  for (AgentId i : s.members()) sum += payoffs.at(i);
  return sum;
}

Allocation shapley(const TUGame& game) {
  const int n = game.agent_count();
  // weight[s] = s! * (n-s-1)! / n!
  std::vector<Rational> weight(n);
  mpz_class n_fact = 1;
  for (int k = 2; k <= n; ++k) n_fact *= k;
  std::vector<mpz_class> fact(n + 1);
  fact[0] = 1;
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  for (int s = 0; s < n; ++s) {
    weight[s] = Rational(fact[s] * fact[n - s - 1], n_fact);
    weight[s].canonicalize();
  }

  Allocation out;
  out.payoffs.assign(n, Rational(0));
  const std::uint32_t all = coalition_count(n);
  for (AgentId i = 0; i < n; ++i) {
    Rational acc(0);
    for (std::uint32_t m = 0; m < all; ++m) {
      if ((m >> i) & 1u) continue;
      const Coalition s(m);
      acc += weight[s.size()] * (game.value(Coalition(m | (1u << i))) - game.value(s));
    }
    out.payoffs[i] = acc;
  }
  return out;
}

TUGame dual_game(const TUGame& game) {
  const int n = game.agent_count();
  TUGame out(n);
  const Rational grand = game.value(game.grand());
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    out.set_value(s, grand - game.value(s.complement(n)));
  }
  return out;
}

namespace {

ConvexityResult scan_supermodularity(const TUGame& game, bool convex) {
  const int n = game.agent_count();
  for (AgentId i = 0; i < n; ++i) {
    const std::uint32_t rest = Coalition::grand(n).without(i).mask();
    // T runs over submasks of N\{i}, S over submasks of T.
    for (std::uint32_t t = 0;; t = (t - rest) & rest) {
      const Rational inc_t =
          game.value(Coalition(t | (1u << i))) - game.value(Coalition(t));
      for (std::uint32_t s = 0;; s = (s - t) & t) {
        const Rational inc_s =
            game.value(Coalition(s | (1u << i))) - game.value(Coalition(s));
        const bool bad = convex ? inc_t < inc_s : inc_t > inc_s;
        if (bad)
          return {false, ConvexityWitness{i, Coalition(s), Coalition(t)}};
        if (s == t) break;
      }
      if (t == rest) break;
    }
  }
  return {true, std::nullopt};
}

}  // namespace

ConvexityResult is_convex(const TUGame& game) { return scan_supermodularity(game, true); }
ConvexityResult is_concave(const TUGame& game) { return scan_supermodularity(game, false); }

GameComparison game_compare(const TUGame& g1, const TUGame& g2) {
  if (g1.agent_count() != g2.agent_count())
    throw std::invalid_argument("game_compare: agent counts differ");
  GameComparison out;
  for (std::uint32_t m = 0; m < coalition_count(g1.agent_count()); ++m) {
    const Coalition s(m);
    if (!out.lower_witness && g1.value(s) < g2.value(s)) out.lower_witness = s;
    if (!out.higher_witness && g1.value(s) > g2.value(s)) out.higher_witness = s;
  }
  if (out.lower_witness && out.higher_witness)
    out.order = GameOrder::Incomparable;
  else if (out.lower_witness)
    out.order = GameOrder::LessEq;
  else if (out.higher_witness)
    out.order = GameOrder::GreaterEq;
  else
    out.order = GameOrder::Equal;
  return out;
}

TUGame weighted_game(const TUGame& g1, const TUGame& g2, const Rational& theta) {
  if (g1.agent_count() != g2.agent_count())
    throw std::invalid_argument("weighted_game: agent counts differ");
  if (theta < 0 || theta > 1)
    throw std::invalid_argument("weighted_game: theta must lie in [0, 1]");
  TUGame out(g1.agent_count());
  const Rational rest = Rational(1) - theta;
  for (std::uint32_t m = 1; m < coalition_count(g1.agent_count()); ++m) {
    const Coalition s(m);
    out.set_value(s, theta * g1.value(s) + rest * g2.value(s));
  }
  return out;
}

Allocation marginal_vector(const TUGame& game, std::span<const AgentId> order) {
  const int n = game.agent_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("marginal_vector: order has wrong length");
  std::uint32_t seen = 0;
  for (AgentId i : order) {
    if (i < 0 || i >= n || ((seen >> i) & 1u))
      throw std::invalid_argument("marginal_vector: not a permutation");
    seen |= 1u << i;
  }
  Allocation out;
  out.payoffs.assign(n, Rational(0));
  Coalition prefix = Coalition::empty();
  for (AgentId i : order) {
    const Coalition next = prefix.with(i);
    out.payoffs[i] = game.value(next) - game.value(prefix);
    prefix = next;
  }
  return out;
}

}  // namespace coopgame
