#include "coopgame/explicit_problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopgame {

namespace {

std::string profile_to_state(const std::vector<int>& profile) {
  std::string s;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile[i]);
  }
  return s;
}

std::vector<int> state_to_profile(const std::string& state, int n) {
  std::vector<int> out;
  out.reserve(n);
  std::size_t pos = 0;
  while (pos <= state.size()) {
    std::size_t next = state.find(',', pos);
    if (next == std::string::npos) next = state.size();
    out.push_back(std::stoi(state.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("bad profile state: " + state);
  return out;
}

// Odometer over the action indices of `members`, rightmost member fastest.
// Calls fn(assignment) for every combination, in ascending tuple order.
template <typename Fn>
void enumerate_assignments(const ExplicitProblem& p, const std::vector<AgentId>& members,
                           Fn&& fn) {
  std::vector<int> pick(members.size(), 0);
  while (true) {
    fn(pick);
    int k = static_cast<int>(members.size()) - 1;
    while (k >= 0) {
      if (++pick[k] < static_cast<int>(p.actions[members[k]].size())) break;
      pick[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

struct Slices {
  const ExplicitProblem& p;
  std::set<std::vector<int>> feasible;

  explicit Slices(const ExplicitProblem& problem)
      : p(problem), feasible(problem.feasible_profiles.begin(),
                             problem.feasible_profiles.end()) {}

  // All assignments for `movers` that keep the combined profile feasible,
  // holding everyone else at base.
  std::vector<std::vector<int>> feasible_assignments(Coalition movers,
                                                     const std::vector<int>& base) const {
    std::vector<std::vector<int>> out;
    const auto members = movers.members();
    std::vector<int> profile = base;
    enumerate_assignments(p, members, [&](const std::vector<int>& pick) {
      for (std::size_t k = 0; k < members.size(); ++k) profile[members[k]] = pick[k];
      if (feasible.count(profile)) out.push_back(profile);
    });
    return out;
  }

  Rational revenue(Coalition who, const std::vector<int>& profile) const {
    Rational sum(0);
    for (AgentId i : who.members()) sum += p.revenues[i][profile[i]];
    return sum;
  }

  // Maximizers of `who` over its feasible slice given base.
  std::vector<std::vector<int>> maximizers(Coalition who, const std::vector<int>& base) const {
    if (who.is_empty()) return {base};
    auto options = feasible_assignments(who, base);
    std::optional<Rational> best;
    for (const auto& profile : options) {
      Rational v = revenue(who, profile);
      if (!best || v > *best) best = v;
    }
    std::vector<std::vector<int>> out;
    for (const auto& profile : options)
      if (revenue(who, profile) == *best) out.push_back(profile);
    return out;
  }

  Rational best_reply(Coalition who, const std::vector<int>& base) const {
    if (who.is_empty()) return Rational(0);
    std::optional<Rational> best;
    for (const auto& profile : feasible_assignments(who, base)) {
      Rational v = revenue(who, profile);
      if (!best || v > *best) best = v;
    }
    if (!best) throw std::logic_error("empty feasible slice; the all-null profile is missing");
    return *best;
  }
};

}  // namespace

void ExplicitProblem::validate() const {
  const int n = agent_count();
  if (n < 1 || n > TUGame::kMaxAgents)
    throw std::invalid_argument("agent count must be in [1, 16]");
  if (static_cast<int>(revenues.size()) != n)
    throw std::invalid_argument("revenue table count must match agent count");
  for (int i = 0; i < n; ++i) {
    if (actions[i].empty())
      throw std::invalid_argument("every agent needs at least the null action");
    if (revenues[i].size() != actions[i].size())
      throw std::invalid_argument("revenue table arity mismatch");
  }
  const std::vector<int> all_null(n, 0);
  bool has_null = false;
  for (const auto& profile : feasible_profiles) {
    if (static_cast<int>(profile.size()) != n)
      throw std::invalid_argument("feasible profile arity mismatch");
    for (int i = 0; i < n; ++i)
      if (profile[i] < 0 || profile[i] >= static_cast<int>(actions[i].size()))
        throw std::invalid_argument("feasible profile references unknown action");
    if (profile == all_null) has_null = true;
  }
  if (!has_null)
    throw std::invalid_argument("the all-null profile must be feasible");
}

ExplicitStaged::ExplicitStaged(const ExplicitProblem& problem)
    : problem_(&problem),
      feasible_(problem.feasible_profiles.begin(), problem.feasible_profiles.end()) {
  problem.validate();
}

std::string ExplicitStaged::initial_state() const {
  return profile_to_state(std::vector<int>(problem_->agent_count(), 0));
}

std::vector<Move> ExplicitStaged::moves(Coalition coalition, const std::string& state) const {
  const int n = problem_->agent_count();
  std::vector<int> profile = state_to_profile(state, n);
  const auto members = coalition.members();
  std::vector<Move> out;
  enumerate_assignments(*problem_, members, [&](const std::vector<int>& pick) {
    std::vector<int> next = profile;
    for (std::size_t k = 0; k < members.size(); ++k) next[members[k]] = pick[k];
    if (!feasible_.count(next)) return;
    Move mv;
    mv.payoff = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Rational& r = problem_->revenues[members[k]][pick[k]];
      mv.member_payoffs.push_back(r);
      mv.payoff += r;
      if (k) mv.label += ",";
      mv.label += problem_->actions[members[k]][pick[k]];
    }
    mv.successor = profile_to_state(next);
    out.push_back(std::move(mv));
  });
  return out;
}

ExplicitGames explicit_games(const ExplicitProblem& problem) {
  problem.validate();
  const int n = problem.agent_count();
  Slices sl(problem);
  const std::vector<int> null_profile(n, 0);
  ExplicitGames out(n);

  for (std::uint32_t mask = 1; mask < coalition_count(n); ++mask) {
    const Coalition s(mask);
    const Coalition outside = s.complement(n);

    out.first.set_value(s, sl.best_reply(s, null_profile));

    {  // minimax route: outside reacts to each S-maximizer candidate
      std::optional<Rational> best;
      for (const auto& a_s : sl.feasible_assignments(s, null_profile)) {
        const Rational own = sl.revenue(s, a_s);
        if (sl.feasible_assignments(outside, a_s).empty() && !outside.is_empty())
          throw std::logic_error("outside has no feasible reaction");
        if (!best || own > *best) best = own;
      }
      out.beta.set_value(s, *best);
    }

    {  // alpha: outside plays any feasible action first
      std::optional<Rational> worst;
      if (outside.is_empty()) {
        worst = sl.best_reply(s, null_profile);
      } else {
        for (const auto& a_out : sl.feasible_assignments(outside, null_profile)) {
          Rational reply = sl.best_reply(s, a_out);
          if (!worst || reply < *worst) worst = reply;
        }
      }
      out.alpha.set_value(s, *worst);
    }

    {  // last-mover: outside plays one of its own maximizers first
      std::optional<Rational> lo, hi;
      for (const auto& a_out : sl.maximizers(outside, null_profile)) {
        Rational reply = sl.best_reply(s, a_out);
        if (!lo || reply < *lo) lo = reply;
        if (!hi || reply > *hi) hi = reply;
      }
      out.last_min.set_value(s, *lo);
      out.last_max.set_value(s, *hi);
    }

    {  // optimistic / pessimistic over all first-moving subsets T of S; the
       // grand coalition's pessimistic value is the problem optimum (no
       // outsiders to impose a first-moving split).
      const bool grand = mask + 1 == coalition_count(n);
      std::optional<Rational> opt, pes;
      std::uint32_t opt_t = 0, pes_t = 0;
      for (std::uint32_t sub : submasks_ascending(mask)) {
        const Coalition t(sub);
        const Coalition tail = s.minus(t);
        std::optional<Rational> stage_max, stage_min;
        for (const auto& a_t : sl.feasible_assignments(t, null_profile)) {
          const Rational own = sl.revenue(t, a_t);
          std::optional<Rational> hi, lo;
          for (const auto& a_out : sl.maximizers(outside, a_t)) {
            Rational reply = sl.best_reply(tail, a_out);
            if (!hi || reply > *hi) hi = reply;
            if (!lo || reply < *lo) lo = reply;
          }
          if (!stage_max || own + *hi > *stage_max) stage_max = own + *hi;
          if (!stage_min || own + *lo > *stage_min) stage_min = own + *lo;
        }
        if (!opt || *stage_max > *opt) {
          opt = *stage_max;
          opt_t = sub;
        }
        if (!grand && (!pes || *stage_min < *pes)) {
          pes = *stage_min;
          pes_t = sub;
        }
      }
      if (grand) {
        pes = out.first.value(s);
        pes_t = 0;
      }
      out.optimistic.game.set_value(s, *opt);
      out.optimistic.realizer[mask] = opt_t;
      out.pessimistic.game.set_value(s, *pes);
      out.pessimistic.realizer[mask] = pes_t;
    }
  }
  return out;
}

ExternalityClass classify_externalities(const ExplicitProblem& problem) {
  problem.validate();
  const int n = problem.agent_count();
  Slices sl(problem);
  const std::vector<int> null_profile(n, 0);
  ExternalityClass out;

  for (std::uint32_t mask = 1; mask + 1 < coalition_count(n); ++mask) {
    const Coalition s(mask);
    const Coalition outside = s.complement(n);
    auto baseline = sl.feasible_assignments(s, null_profile);
    std::set<std::vector<int>> base_set;
    for (auto& profile : baseline) {
      std::vector<int> slice;
      for (AgentId i : s.members()) slice.push_back(profile[i]);
      base_set.insert(std::move(slice));
    }
    for (const auto& a_out : sl.feasible_assignments(outside, null_profile)) {
      std::set<std::vector<int>> now;
      std::vector<std::vector<int>> now_full = sl.feasible_assignments(s, a_out);
      for (const auto& profile : now_full) {
        std::vector<int> slice;
        for (AgentId i : s.members()) slice.push_back(profile[i]);
        now.insert(std::move(slice));
      }
      if (!out.gained) {
        for (const auto& slice : now)
          if (!base_set.count(slice)) {
            out.ever_grew = true;
            std::vector<int> affected = a_out;
            auto members = s.members();
            for (std::size_t k = 0; k < members.size(); ++k)
              affected[members[k]] = slice[k];
            out.gained = ExternalityWitness{s, a_out, affected};
            break;
          }
      } else {
        for (const auto& slice : now)
          if (!base_set.count(slice)) out.ever_grew = true;
      }
      if (!out.lost) {
        for (const auto& slice : base_set)
          if (!now.count(slice)) {
            out.ever_shrank = true;
            std::vector<int> affected = null_profile;
            auto members = s.members();
            for (std::size_t k = 0; k < members.size(); ++k)
              affected[members[k]] = slice[k];
            out.lost = ExternalityWitness{s, a_out, affected};
            break;
          }
      } else {
        for (const auto& slice : base_set)
          if (!now.count(slice)) out.ever_shrank = true;
      }
      if (out.ever_grew && out.ever_shrank) break;
    }
    if (out.ever_grew && out.ever_shrank) break;
  }

  if (!out.ever_grew)
    out.tag = ExternalityTag::Negative;
  else if (!out.ever_shrank)
    out.tag = ExternalityTag::Positive;
  else
    out.tag = ExternalityTag::Mixed;
  return out;
}

}  // namespace coopgame
