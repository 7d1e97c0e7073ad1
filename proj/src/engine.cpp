#include "coopgame/engine.hpp"

#include "coopgame/polytope.hpp"

#include <stdexcept>

namespace coopgame {

namespace {

std::string memo_key(Coalition c, const std::string& state) {
  return std::to_string(c.mask()) + "|" + state;
}

Move noop_move(const std::string& state) {
  return Move{"idle", Rational(0), {}, state};
}

}  // namespace

std::string to_string(ExternalityTag tag) {
  switch (tag) {
    case ExternalityTag::Negative: return "negative";
    case ExternalityTag::Positive: return "positive";
    case ExternalityTag::Mixed: return "mixed";
  }
  return "?";
}

Engine::Engine(const StagedProblem& problem)
    : problem_(&problem), n_(problem.agent_count()), initial_(problem.initial_state()) {
  if (n_ < 1 || n_ > TUGame::kMaxAgents)
    throw std::invalid_argument("agent count must be in [1, 16]");
}

const std::vector<Move>& Engine::moves_of(Coalition c, const std::string& state) {
  const std::string key = memo_key(c, state);
  auto it = moves_memo_.find(key);
  if (it != moves_memo_.end()) return it->second;

  std::vector<Move> mv;
  if (c.is_empty()) {
    mv.push_back(noop_move(state));
  } else {
    mv = problem_->moves(c, state);
    if (mv.empty()) throw std::logic_error("adapter returned no moves");
    for (const auto& m : mv) {
      if (static_cast<int>(m.member_payoffs.size()) != c.size())
        throw std::logic_error("move member payoffs do not match coalition size");
      Rational sum(0);
      for (const auto& p : m.member_payoffs) sum += p;
      if (sum != m.payoff)
        throw std::logic_error("move member payoffs do not sum to the move payoff");
    }
  }
  return moves_memo_.emplace(key, std::move(mv)).first->second;
}

const Rational& Engine::best_value(Coalition c, const std::string& state) {
  const std::string key = memo_key(c, state);
  auto it = best_memo_.find(key);
  if (it != best_memo_.end()) return it->second;
  const auto& mv = moves_of(c, state);
  Rational best = mv.front().payoff;
  for (const auto& m : mv)
    if (m.payoff > best) best = m.payoff;
  return best_memo_.emplace(key, std::move(best)).first->second;
}

const std::vector<Move>& Engine::maximizer_set(Coalition c, const std::string& state) {
  const std::string key = memo_key(c, state);
  auto it = maximizer_memo_.find(key);
  if (it != maximizer_memo_.end()) return it->second;
  const Rational best = best_value(c, state);
  std::vector<Move> out;
  for (const auto& m : moves_of(c, state))
    if (m.payoff == best) out.push_back(m);
  return maximizer_memo_.emplace(key, std::move(out)).first->second;
}

const Move& Engine::grand_move() {
  if (!grand_move_) {
    const auto& maxima = maximizer_set(grand(), initial_);
    const Move* pick = &maxima.front();
    for (const auto& m : maxima)
      if (m.label < pick->label) pick = &m;
    grand_move_ = *pick;
  }
  return *grand_move_;
}

const Rational& Engine::grand_value() {
  if (!grand_value_) grand_value_ = best_value(grand(), initial_);
  return *grand_value_;
}

const TUGame& Engine::v_first() {
  if (!first_) {
    TUGame g(n_);
    for (std::uint32_t m = 1; m < coalition_count(n_); ++m)
      g.set_value(Coalition(m), best_value(Coalition(m), initial_));
    first_ = std::move(g);
  }
  return *first_;
}

const TUGame& Engine::v_beta() {
  if (!beta_) {
    TUGame g(n_);
    for (std::uint32_t mask = 1; mask < coalition_count(n_); ++mask) {
      const Coalition s(mask);
      const Coalition rest = s.complement(n_);
      std::optional<Rational> best;
      for (const auto& mv : moves_of(s, initial_)) {
        // The complement reacts after S has moved; payoffs accrue at move
        // time, so its minimization ranges over a nonempty set of follow-ups
        // that cannot touch what S already earned.
        if (moves_of(rest, mv.successor).empty())
          throw std::logic_error("complement has no follow-up move");
        if (!best || mv.payoff > *best) best = mv.payoff;
      }
      g.set_value(s, *best);
    }
    if (!(g == v_first()))
      throw std::logic_error("minimax route disagrees with the first-mover game");
    beta_ = std::move(g);
  }
  return *beta_;
}

const TUGame& Engine::v_alpha() {
  if (!alpha_) {
    TUGame g(n_);
    for (std::uint32_t mask = 1; mask < coalition_count(n_); ++mask) {
      const Coalition s(mask);
      const Coalition rest = s.complement(n_);
      std::optional<Rational> worst;
      for (const auto& mv : moves_of(rest, initial_)) {
        const Rational reply = best_value(s, mv.successor);
        if (!worst || reply < *worst) worst = reply;
      }
      g.set_value(s, *worst);
    }
    alpha_ = std::move(g);
  }
  return *alpha_;
}

const TUGame& Engine::v_last(Mode mode) {
  auto& slot = mode == Mode::Min ? last_min_ : last_max_;
  if (!slot) {
    TUGame g(n_);
    for (std::uint32_t mask = 1; mask < coalition_count(n_); ++mask) {
      const Coalition s(mask);
      const Coalition rest = s.complement(n_);
      std::optional<Rational> pick;
      for (const auto& mv : maximizer_set(rest, initial_)) {
        const Rational reply = best_value(s, mv.successor);
        if (!pick || (mode == Mode::Min ? reply < *pick : reply > *pick)) pick = reply;
      }
      g.set_value(s, *pick);
    }
    slot = std::move(g);
  }
  return *slot;
}

Rational Engine::v_stage(Coalition t, Coalition s, Mode mode) {
  if (!t.subset_of(s)) throw std::invalid_argument("v_stage requires T subset of S");
  const Coalition outside = s.complement(n_);
  const Coalition rest = s.minus(t);
  std::optional<Rational> best;
  for (const auto& first_move : moves_of(t, initial_)) {
    std::optional<Rational> pick;
    for (const auto& reaction : maximizer_set(outside, first_move.successor)) {
      const Rational tail = best_value(rest, reaction.successor);
      if (!pick || (mode == Mode::Min ? tail < *pick : tail > *pick)) pick = tail;
    }
    const Rational total = first_move.payoff + *pick;
    if (!best || total > *best) best = total;
  }
  return *best;
}

const RealizedGame& Engine::v_optimistic() {
  if (!optimistic_) {
    RealizedGame out{TUGame(n_), std::vector<std::uint32_t>(coalition_count(n_), 0)};
    for (std::uint32_t mask = 1; mask < coalition_count(n_); ++mask) {
      std::optional<Rational> best;
      std::uint32_t who = 0;
      for (std::uint32_t sub : submasks_ascending(mask)) {
        const Rational val = v_stage(Coalition(sub), Coalition(mask), Mode::Max);
        if (!best || val > *best) {
          best = val;
          who = sub;
        }
      }
      out.game.set_value(Coalition(mask), *best);
      out.realizer[mask] = who;
    }
    optimistic_ = std::move(out);
  }
  return *optimistic_;
}

const RealizedGame& Engine::v_pessimistic() {
  if (!pessimistic_) {
    RealizedGame out{TUGame(n_), std::vector<std::uint32_t>(coalition_count(n_), 0)};
    const std::uint32_t grand_mask = coalition_count(n_) - 1;
    for (std::uint32_t mask = 1; mask < grand_mask; ++mask) {
      std::optional<Rational> worst;
      std::uint32_t who = 0;
      for (std::uint32_t sub : submasks_ascending(mask)) {
        const Rational val = v_stage(Coalition(sub), Coalition(mask), Mode::Min);
        if (!worst || val < *worst) {
          worst = val;
          who = sub;
        }
      }
      out.game.set_value(Coalition(mask), *worst);
      out.realizer[mask] = who;
    }
    // The grand coalition faces no outsiders; worst-casing it over its own
    // first-moving subsets would price in commitment friction no opponent can
    // exploit. All games share the efficiency level of the problem optimum,
    // attained by the whole coalition moving at once (T = empty or T = N).
    out.game.set_value(Coalition(grand_mask), grand_value());
    out.realizer[grand_mask] = 0;
    pessimistic_ = std::move(out);
  }
  return *pessimistic_;
}

std::vector<std::uint32_t> Engine::realizing_subsets(Coalition s, Mode mode) {
  if (s.is_empty()) return {0};
  const Rational target = mode == Mode::Max ? v_optimistic().game.value(s)
                                            : v_pessimistic().game.value(s);
  std::vector<std::uint32_t> out;
  for (std::uint32_t sub : submasks_ascending(s.mask()))
    if (v_stage(Coalition(sub), s, mode) == target) out.push_back(sub);
  return out;
}

GameTable build_game_table(Engine& engine) {
  GameTable t;
  t.n = engine.agent_count();
  t.alpha = engine.v_alpha();
  t.beta = engine.v_beta();
  t.first = engine.v_first();
  t.last_min = engine.v_last(Mode::Min);
  t.last_max = engine.v_last(Mode::Max);
  t.optimistic = engine.v_optimistic().game;
  t.pessimistic = engine.v_pessimistic().game;
  t.optimistic_subset = engine.v_optimistic().realizer;
  t.pessimistic_subset = engine.v_pessimistic().realizer;

  const Coalition grand = engine.grand();
  const Rational& v_n = engine.grand_value();
  for (const TUGame* g : {&t.first, &t.last_min, &t.last_max, &t.optimistic, &t.pessimistic})
    if (g->value(grand) != v_n)
      throw std::logic_error("grand-coalition values disagree across games");
  return t;
}

WitnessReport anticore_witness(Engine& engine) {
  WitnessReport out;
  out.x.payoffs = engine.grand_move().member_payoffs;
  auto check = anti_core_membership(engine.v_first(), out.x);
  out.in_anticore = check.member;
  out.violated = check.violated;
  return out;
}

SequentialEfficiencyReport check_sequential_efficiency(Engine& engine) {
  SequentialEfficiencyReport out;
  const int n = engine.agent_count();
  const std::string init = engine.problem().initial_state();
  const Rational& grand = engine.grand_value();
  for (std::uint32_t mask = 0; mask + 1 < coalition_count(n); ++mask) {
    const Coalition s(mask);
    const Coalition rest = s.complement(n);
    SequentialEfficiencyRow row;
    row.s = s;
    for (const auto& mv : engine.maximizer_set(s, init)) {
      if (mv.payoff + engine.best_value(rest, mv.successor) == grand) {
        row.sequential_efficient = true;
        break;
      }
    }
    const Rational vf = mask == 0 ? Rational(0) : engine.v_first().value(s);
    row.dual_min = vf + engine.v_last(Mode::Min).value(rest) == grand;
    out.all_sequential = out.all_sequential && row.sequential_efficient;
    out.all_dual = out.all_dual && row.dual_min;
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

struct AuditBuilder {
  Engine& engine;
  AuditReport report;

  void add(std::string name, bool holds, std::string detail = "") {
    report.all_hold = report.all_hold && holds;
    report.claims.push_back({std::move(name), holds, std::move(detail)});
  }

  // g1 <= g2 coalition-wise; proper_only restricts to S != N.
  void chain(const std::string& name, const TUGame& g1, const TUGame& g2,
             bool proper_only = false) {
    const std::uint32_t grand = coalition_count(engine.agent_count()) - 1;
    for (std::uint32_t m = 0; m <= (proper_only ? grand - 1 : grand); ++m)
      if (g1.value(Coalition(m)) > g2.value(Coalition(m))) {
        add(name, false,
            "violated at " + Coalition(m).to_string() + ": " +
                rational_str(g1.value(Coalition(m))) + " > " +
                rational_str(g2.value(Coalition(m))));
        return;
      }
    add(name, true);
  }

  void identity(const std::string& name, const TUGame& g1, const TUGame& g2,
                bool proper_only = false) {
    const std::uint32_t grand = coalition_count(engine.agent_count()) - 1;
    for (std::uint32_t m = 0; m <= (proper_only ? grand - 1 : grand); ++m)
      if (g1.value(Coalition(m)) != g2.value(Coalition(m))) {
        add(name, false,
            "differs at " + Coalition(m).to_string() + ": " +
                rational_str(g1.value(Coalition(m))) + " vs " +
                rational_str(g2.value(Coalition(m))));
        return;
      }
    add(name, true);
  }

  void inclusion(const std::string& name, const TUGame& outer_anti, const TUGame& inner_core) {
    auto res = inclusion_anticore_in_core(outer_anti, inner_core);
    add(name, res.holds,
        res.holds ? "" : "sum test fails at " + res.violating->to_string());
  }
};

}  // namespace

AuditReport theorem_audit(Engine& engine, ExternalityTag declared) {
  AuditBuilder b{engine, {}};
  b.report.declared = declared;
  const int n = engine.agent_count();

  GameTable t = build_game_table(engine);  // also checks grand agreement
  b.add("grand values agree across games", true);
  b.add("beta equals first-mover (minimax shortcut)", t.beta == t.first);

  // Reduction identities of the three-stage value.
  bool reduce_full = true, reduce_empty = true;
  std::string detail_full, detail_empty;
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    if (engine.v_stage(s, s, Mode::Min) != t.first.value(s) ||
        engine.v_stage(s, s, Mode::Max) != t.first.value(s)) {
      reduce_full = false;
      detail_full = "at " + s.to_string();
      break;
    }
  }
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    if (engine.v_stage(Coalition::empty(), s, Mode::Min) != t.last_min.value(s) ||
        engine.v_stage(Coalition::empty(), s, Mode::Max) != t.last_max.value(s)) {
      reduce_empty = false;
      detail_empty = "at " + s.to_string();
      break;
    }
  }
  b.add("three-stage value with T=S reduces to first-mover", reduce_full, detail_full);
  b.add("three-stage value with T=empty reduces to last-mover", reduce_empty, detail_empty);

  // Class-independent orderings: first/last are among the candidate subsets.
  b.chain("pessimistic <= last-mover (min)", t.pessimistic, t.last_min);
  b.chain("pessimistic <= first-mover", t.pessimistic, t.first);
  b.chain("first-mover <= optimistic", t.first, t.optimistic);
  b.chain("last-mover (max) <= optimistic", t.last_max, t.optimistic);
  b.chain("last-mover (min) <= last-mover (max)", t.last_min, t.last_max);

  // Inclusions that hold for every problem.
  b.inclusion("anti-core(first) within core(last-min)", t.first, t.last_min);
  b.inclusion("anti-core(last-max) within core(first)", t.last_max, t.first);

  if (declared == ExternalityTag::Negative) {
    b.chain("alpha <= last-mover (min)", t.alpha, t.last_min);
    b.chain("last-mover (max) <= first-mover", t.last_max, t.first);
    b.identity("optimistic == first-mover on proper coalitions", t.optimistic, t.first,
               /*proper_only=*/true);
    b.identity("pessimistic == last-mover (min) on proper coalitions", t.pessimistic,
               t.last_min, /*proper_only=*/true);
    auto anti = anti_core_nonempty(t.optimistic);
    b.add("anti-core(optimistic) nonempty", anti.nonempty);
    auto witness = anticore_witness(engine);
    b.add("grand-play payoff vector lies in anti-core(first)", witness.in_anticore,
          witness.in_anticore ? "" : "violated at " + witness.violated->to_string());
    b.inclusion("anti-core(optimistic) within core(pessimistic)", t.optimistic,
                t.pessimistic);
  } else if (declared == ExternalityTag::Positive) {
    b.identity("alpha == first-mover", t.alpha, t.first);
    b.chain("first-mover <= last-mover (min)", t.first, t.last_min);
    b.identity("pessimistic == first-mover on proper coalitions", t.pessimistic, t.first,
               /*proper_only=*/true);
    b.inclusion("anti-core(last-max) within core(pessimistic)", t.last_max,
                t.pessimistic);
  }

  return b.report;
}

}  // namespace coopgame
