#include "coopgame/apps/airport.hpp"

#include <algorithm>
#include <stdexcept>

namespace coopgame {

int AirportInstance::max_length() const {
  return *std::max_element(lengths.begin(), lengths.end());
}

Rational AirportInstance::cumulative_cost(int length) const {
  Rational acc(0);
  for (int k = 0; k < length; ++k) acc += segment_costs[k];
  return acc;
}

void AirportInstance::validate() const {
  if (lengths.empty()) throw std::invalid_argument("need at least one agent");
  for (int l : lengths)
    if (l < 1) throw std::invalid_argument("required lengths must be positive");
  if (static_cast<int>(segment_costs.size()) < max_length())
    throw std::invalid_argument("segment costs must cover the longest requirement");
  for (const auto& c : segment_costs)
    if (c < 0) throw std::invalid_argument("segment costs must be nonnegative");
}

namespace {

int longest(const AirportInstance& a, Coalition who) {
  int best = 0;
  for (AgentId i : who.members()) best = std::max(best, a.lengths[i]);
  return best;
}

}  // namespace

TUGame airport_first(const AirportInstance& a) {
  a.validate();
  const int n = a.agent_count();
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m)
    g.set_value(Coalition(m), -a.cumulative_cost(longest(a, Coalition(m))));
  return g;
}

TUGame airport_last(const AirportInstance& a) {
  a.validate();
  const int n = a.agent_count();
  const Rational full = a.cumulative_cost(longest(a, Coalition::grand(n)));
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    g.set_value(s, -(full - a.cumulative_cost(longest(a, s.complement(n)))));
  }
  return g;
}

ExplicitProblem airport_explicit(const AirportInstance& a) {
  a.validate();
  const int n = a.agent_count();
  const int top = a.max_length();
  Rational big = (a.cumulative_cost(top) + 1) * (n + 1);

  // An action either stays out, builds nothing (rides on what others build),
  // or buys the segment interval (j, k] at cost c(k) - c(j).
  struct Build {
    int from, to;  // segments from+1..to
  };
  std::vector<Build> builds{{0, 0}};
  for (int j = 0; j < top; ++j)
    for (int k = j + 1; k <= top; ++k) builds.push_back({j, k});

  ExplicitProblem p;
  p.actions.resize(n);
  p.revenues.resize(n);
  for (int i = 0; i < n; ++i) {
    p.actions[i].push_back("out");
    p.revenues[i].push_back(-big);
    for (const auto& b : builds) {
      p.actions[i].push_back("b" + std::to_string(b.from) + "." + std::to_string(b.to));
      p.revenues[i].push_back(-(a.cumulative_cost(b.to) - a.cumulative_cost(b.from)));
    }
  }

  // Feasible when each active agent's segments 1..l_i are all built by the
  // union of everybody's intervals.
  std::vector<int> profile(n, 0);
  while (true) {
    std::uint32_t built = 0;
    for (int i = 0; i < n; ++i)
      if (profile[i] > 0) {
        const Build& b = builds[profile[i] - 1];
        for (int seg = b.from + 1; seg <= b.to; ++seg) built |= 1u << seg;
      }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (profile[i] == 0) continue;
      for (int seg = 1; seg <= a.lengths[i] && ok; ++seg)
        if (!((built >> seg) & 1u)) ok = false;
    }
    if (ok) p.feasible_profiles.push_back(profile);
    int k = n - 1;
    while (k >= 0) {
      if (++profile[k] <= static_cast<int>(builds.size())) break;
      profile[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return p;
}

AirportStaged::AirportStaged(AirportInstance instance) : instance_(std::move(instance)) {
  instance_.validate();
}

std::vector<Move> AirportStaged::moves(Coalition coalition, const std::string& state) const {
  const int built = std::stoi(state);
  const int need = std::max(built, longest(instance_, coalition));
  const int top = std::max(need, instance_.max_length());
  const auto members = coalition.members();

  // The member with the longest requirement (first such index) pays the
  // extension; everyone else rides along.
  AgentId payer = members.front();
  for (AgentId i : members)
    if (instance_.lengths[i] > instance_.lengths[payer]) payer = i;

  std::vector<Move> out;

  // Staying out entirely leaves members unserved at the prohibitive cost;
  // never optimal, but it is a feasible (in)action others must reckon with.
  const Rational big = (instance_.cumulative_cost(instance_.max_length()) + 1) *
                       (instance_.agent_count() + 1);
  Move idle;
  idle.label = "idle";
  for (std::size_t k = 0; k < members.size(); ++k) {
    idle.member_payoffs.push_back(-big);
    idle.payoff -= big;
  }
  idle.successor = state;
  out.push_back(std::move(idle));

  for (int target = need; target <= top; ++target) {
    Move mv;
    mv.label = "extend" + std::to_string(target);
    const Rational cost =
        instance_.cumulative_cost(target) - instance_.cumulative_cost(built);
    for (AgentId i : members)
      mv.member_payoffs.push_back(i == payer ? -cost : Rational(0));
    mv.payoff = -cost;
    mv.successor = std::to_string(target);
    out.push_back(std::move(mv));
  }
  return out;
}

}  // namespace coopgame
