#include "coopgame/apps/river.hpp"

#include <map>
#include <stdexcept>

namespace coopgame {

int RiverInstance::total_water() const {
  int total = 0;
  for (int e : entries) total += e;
  return total;
}

Rational RiverInstance::benefit(AgentId agent, long units) const {
  Rational acc(0);
  for (long k = 0; k < units; ++k) acc += marginal_benefits[agent][k];
  return acc;
}

void RiverInstance::validate() const {
  const int n = agent_count();
  if (n < 1) throw std::invalid_argument("need at least one location");
  if (static_cast<int>(marginal_benefits.size()) != n)
    throw std::invalid_argument("benefit list count must match location count");
  for (int e : entries)
    if (e < 0) throw std::invalid_argument("water entries must be nonnegative");
  for (const auto& list : marginal_benefits) {
    if (static_cast<int>(list.size()) < total_water())
      throw std::invalid_argument("benefit lists must cover the whole river");
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (list[k] <= 0) throw std::invalid_argument("marginal benefits must be positive");
      if (k > 0 && list[k] >= list[k - 1])
        throw std::invalid_argument("marginal benefits must be strictly decreasing");
    }
  }
}

namespace {

// max sum of member benefits subject to, at every location, cumulative
// consumption <= cumulative supply. Supply at a location is its entry when
// the corresponding bit of entry_mask is set, else 0. Plain DP over
// (location, carried stock).
Rational flow_optimum(const RiverInstance& inst, Coalition consumers,
                      std::uint32_t entry_mask) {
  const int n = inst.agent_count();
  std::map<int, Rational> best{{0, Rational(0)}};  // carried stock -> value
  for (int loc = 0; loc < n; ++loc) {
    std::map<int, Rational> next;
    const int inflow = (entry_mask >> loc) & 1u ? inst.entries[loc] : 0;
    for (const auto& [carry, value] : best) {
      const int avail = carry + inflow;
      const int take_max = consumers.contains(loc) ? avail : 0;
      for (int take = 0; take <= take_max; ++take) {
        const Rational total = value + inst.benefit(loc, take);
        const int left = avail - take;
        auto it = next.find(left);
        if (it == next.end() || total > it->second) next[left] = total;
      }
    }
    best = std::move(next);
  }
  Rational top = best.begin()->second;
  for (const auto& [carry, value] : best) top = std::max(top, value);
  return top;
}

}  // namespace

std::vector<Coalition> consecutive_blocks(Coalition s) {
  std::vector<Coalition> blocks;
  Coalition current = Coalition::empty();
  int prev = -2;
  for (AgentId i : s.members()) {
    if (i != prev + 1 && !current.is_empty()) {
      blocks.push_back(current);
      current = Coalition::empty();
    }
    current = current.with(i);
    prev = i;
  }
  if (!current.is_empty()) blocks.push_back(current);
  return blocks;
}

Rational river_unlimited(const RiverInstance& inst, Coalition s) {
  return flow_optimum(inst, s, coalition_count(inst.agent_count()) - 1);
}

Rational river_sovereignty(const RiverInstance& inst, Coalition s) {
  Rational acc(0);
  for (Coalition block : consecutive_blocks(s))
    acc += flow_optimum(inst, block, block.mask());
  return acc;
}

Rational river_last(const RiverInstance& inst, Coalition s) {
  const int n = inst.agent_count();
  if (s.is_empty() || !s.contains(n - 1)) return Rational(0);
  Coalition tail = Coalition::empty();
  for (AgentId i = n - 1; i >= 0 && s.contains(i); --i) tail = tail.with(i);
  return flow_optimum(inst, tail, tail.mask());
}

RiverGames river_games(const RiverInstance& inst) {
  inst.validate();
  const int n = inst.agent_count();
  RiverGames out(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    out.unlimited.set_value(s, river_unlimited(inst, s));
    out.sovereignty.set_value(s, river_sovereignty(inst, s));
    out.last.set_value(s, river_last(inst, s));
  }
  RiverStaged staged(inst);
  Engine engine(staged);
  out.pessimistic = engine.v_pessimistic().game;
  if (!(out.pessimistic == out.last))
    throw std::logic_error("staged pessimistic game disagrees with the arrive-last form");
  return out;
}

Allocation downstream_incremental(const RiverInstance& inst) {
  inst.validate();
  const int n = inst.agent_count();
  Allocation out;
  out.payoffs.assign(n, Rational(0));
  Coalition prefix = Coalition::empty();
  Rational prev_uti(0), prev_ats(0);
  for (AgentId i = 0; i < n; ++i) {
    prefix = prefix.with(i);
    const Rational uti = river_unlimited(inst, prefix);
    const Rational ats = river_sovereignty(inst, prefix);
    if (uti - prev_uti != ats - prev_ats)
      throw std::logic_error("prefix increments disagree between the two doctrines");
    out.payoffs[i] = uti - prev_uti;
    prev_uti = uti;
    prev_ats = ats;
  }
  return out;
}

RiverStaged::RiverStaged(RiverInstance instance) : instance_(std::move(instance)) {
  instance_.validate();
}

std::string RiverStaged::initial_state() const {
  std::string s;
  for (int i = 0; i < instance_.agent_count(); ++i) {
    if (i) s += ",";
    s += "0";
  }
  return s;
}

std::vector<Move> RiverStaged::moves(Coalition coalition, const std::string& state) const {
  const int n = instance_.agent_count();
  std::vector<int> consumed;
  {
    std::size_t pos = 0;
    while (pos <= state.size()) {
      std::size_t next = state.find(',', pos);
      if (next == std::string::npos) next = state.size();
      consumed.push_back(std::stoi(state.substr(pos, next - pos)));
      pos = next + 1;
    }
  }

  // Remaining cumulative availability at each location.
  std::vector<int> room(n, 0);
  {
    int acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += instance_.entries[i] - consumed[i];
      room[i] = acc;
    }
  }

  const auto members = coalition.members();
  std::vector<Move> out;
  std::vector<int> take(members.size(), 0);
  while (true) {
    // Feasibility: cumulative takes fit into cumulative remaining supply.
    bool ok = true;
    {
      int acc = 0;
      std::size_t k = 0;
      for (int loc = 0; loc < n && ok; ++loc) {
        if (k < members.size() && members[k] == loc) acc += take[k++];
        if (acc > room[loc]) ok = false;
      }
    }
    if (ok) {
      Move mv;
      std::vector<int> next = consumed;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const Rational gain = instance_.benefit(members[k], take[k]);
        mv.member_payoffs.push_back(gain);
        mv.payoff += gain;
        next[members[k]] += take[k];
        if (k) mv.label += ",";
        mv.label += std::to_string(take[k]);
      }
      mv.label = "x=" + mv.label;
      std::string succ;
      for (int i = 0; i < n; ++i) {
        if (i) succ += ",";
        succ += std::to_string(next[i]);
      }
      mv.successor = std::move(succ);
      out.push_back(std::move(mv));
    }
    int k = static_cast<int>(members.size()) - 1;
    while (k >= 0) {
      if (++take[k] <= instance_.total_water()) break;
      take[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace coopgame
