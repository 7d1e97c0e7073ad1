#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "coopgame/apps/mcst.hpp"
#include "coopgame/apps/river.hpp"
#include "coopgame/polytope.hpp"
#include "coopgame/instance_gen.hpp"
#include "test_util.hpp"

using namespace coopgame;

namespace {

McstInstance two_agent_instance() {
  // c01=10, c02=4, c12=3 over nodes {0,1,2}.
  McstInstance m;
  m.cost = {{rat(0), rat(10), rat(4)},
            {rat(10), rat(0), rat(3)},
            {rat(4), rat(3), rat(0)}};
  return m;
}

Rational tree_cost(const McstInstance& inst, const std::vector<std::pair<int, int>>& tree) {
  Rational acc(0);
  for (auto [a, b] : tree) acc += inst.cost[a][b];
  return acc;
}

// Exhaustive minimum over all spanning trees of the complete graph on the
// node set (source plus the agents listed in `mask`), via relabeling.
Rational min_tree_cost_by_enumeration(const McstInstance& inst, std::uint32_t mask) {
  std::vector<int> nodes{0};
  for (AgentId a : Coalition(mask).members()) nodes.push_back(a + 1);
  std::optional<Rational> best;
  for (const auto& tree : all_spanning_trees(static_cast<int>(nodes.size()))) {
    Rational acc(0);
    for (auto [a, b] : tree) acc += inst.cost[nodes[a]][nodes[b]];
    if (!best || acc < *best) best = acc;
  }
  return *best;
}

RiverInstance two_location_river() {
  RiverInstance r;
  r.entries = {1, 1};
  r.marginal_benefits = {{rat(10), rat(1)}, {rat(8), rat(6)}};
  return r;
}

// Enumerates every integer allocation obeying the cumulative constraints with
// the given entry mask; independent of the DP solver.
Rational river_value_by_enumeration(const RiverInstance& inst, Coalition s,
                                    std::uint32_t entry_mask) {
  const int n = inst.agent_count();
  const int water = inst.total_water();
  std::vector<int> x(n, 0);
  std::optional<Rational> best;
  while (true) {
    bool ok = true;
    int cum_take = 0, cum_supply = 0;
    for (int i = 0; i < n && ok; ++i) {
      if ((entry_mask >> i) & 1u) cum_supply += inst.entries[i];
      cum_take += x[i];
      if (!s.contains(i) && x[i] > 0) ok = false;
      if (cum_take > cum_supply) ok = false;
    }
    if (ok) {
      Rational total(0);
      for (int i = 0; i < n; ++i) total += inst.benefit(i, x[i]);
      if (!best || total > *best) best = total;
    }
    int k = n - 1;
    while (k >= 0) {
      if (++x[k] <= water) break;
      x[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return *best;
}

}  // namespace

TEST_CASE("minimum spanning trees") {
  McstInstance inst = two_agent_instance();
  SUBCASE("two-agent instance wires through the cheap relay") {
    auto tree = mst(inst, Coalition(0b11));
    CHECK(tree.cost == rat(7));
    REQUIRE(tree.agents == std::vector<AgentId>{0, 1});
    CHECK(tree.parent == std::vector<int>{2, 0});  // 0 - 2 - 1
  }
  SUBCASE("source alone costs nothing") {
    auto tree = mst(inst, Coalition::empty());
    CHECK(tree.cost == 0);
    CHECK(tree.parent.empty());
  }
  SUBCASE("uniform costs cost one edge per agent") {
    McstInstance u;
    u.cost.assign(4, std::vector<Rational>(4, rat(2)));
    for (int i = 0; i < 4; ++i) u.cost[i][i] = 0;
    CHECK(mst(u, Coalition(0b111)).cost == rat(6));
  }
  SUBCASE("agrees with spanning-tree enumeration on random instances") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      McstInstance m = gen::mcst(rng, 4);
      const int n = m.agent_count();
      for (std::uint32_t mask = 0; mask < coalition_count(n); ++mask)
        CHECK(mst(m, Coalition(mask)).cost == min_tree_cost_by_enumeration(m, mask));
    }
  }
}

TEST_CASE("connection games") {
  McstInstance inst = two_agent_instance();
  TUGame pes = mcst_pessimistic(inst);
  TUGame opt = mcst_optimistic(inst);
  CHECK(pes.value(Coalition(0b01)) == rat(-10));
  CHECK(pes.value(Coalition(0b10)) == rat(-4));
  CHECK(pes.value(Coalition(0b11)) == rat(-7));
  CHECK(opt.value(Coalition(0b01)) == rat(-3));  // attach through the peer's node
  CHECK(opt.value(Coalition(0b10)) == rat(-3));
  CHECK(opt.value(Coalition(0b11)) == rat(-7));

  SUBCASE("more sources never hurt") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
      McstInstance m = gen::mcst(rng, 4);
      TUGame p = mcst_pessimistic(m);
      TUGame o = mcst_optimistic(m);
      for (std::uint32_t mask = 1; mask < coalition_count(m.agent_count()); ++mask)
        CHECK(o.value(Coalition(mask)) >= p.value(Coalition(mask)));
    }
  }
  SUBCASE("complete symmetric costs attach everyone at the cheap edge") {
    McstInstance u;
    u.cost.assign(4, std::vector<Rational>(4, rat(2)));
    for (int i = 0; i < 4; ++i) u.cost[i][i] = 0;
    TUGame o = mcst_optimistic(u);
    for (std::uint32_t mask = 1; mask < 8; ++mask)
      CHECK(o.value(Coalition(mask)) == rat(-2) * Coalition(mask).size());
  }
}

TEST_CASE("irreducible cost matrix") {
  McstInstance inst = two_agent_instance();
  McstInstance reduced = irreducible_matrix(inst);
  CHECK(reduced.cost[0][1] == rat(4));
  CHECK(reduced.cost[0][2] == rat(4));
  CHECK(reduced.cost[1][2] == rat(3));

  SUBCASE("fixed point, entrywise below, same optimum") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 15; ++trial) {
      McstInstance m = gen::mcst(rng, 4);
      McstInstance r = irreducible_matrix(m);
      const int nodes = m.agent_count() + 1;
      for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) CHECK(r.cost[i][j] <= m.cost[i][j]);
      CHECK(mst(r, Coalition::grand(m.agent_count())).cost ==
            mst(m, Coalition::grand(m.agent_count())).cost);
      McstInstance rr = irreducible_matrix(r);
      CHECK(rr.cost == r.cost);
    }
  }
  SUBCASE("independent of the chosen optimal tree") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
      McstInstance m = gen::mcst(rng, 3);
      const int nodes = m.agent_count() + 1;
      const Rational best = mst(m, Coalition::grand(m.agent_count())).cost;
      std::set<std::vector<std::string>> reductions;
      for (const auto& tree : all_spanning_trees(nodes)) {
        if (tree_cost(m, tree) != best) continue;
        // Recompute the path-max matrix from this optimal tree directly.
        std::vector<std::vector<int>> adj(nodes);
        std::map<std::pair<int, int>, Rational> edge_cost;
        for (auto [a, b] : tree) {
          adj[a].push_back(b);
          adj[b].push_back(a);
          edge_cost[{a, b}] = edge_cost[{b, a}] = m.cost[a][b];
        }
        std::vector<std::string> flat;
        for (int s = 0; s < nodes; ++s)
          for (int t = 0; t < nodes; ++t) {
            if (s == t) {
              flat.push_back("0");
              continue;
            }
            // BFS path from s to t tracking the max edge.
            std::vector<int> prev(nodes, -1);
            std::vector<bool> seen(nodes, false);
            std::vector<int> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
              int u = stack.back();
              stack.pop_back();
              for (int v : adj[u])
                if (!seen[v]) {
                  seen[v] = true;
                  prev[v] = u;
                  stack.push_back(v);
                }
            }
            Rational top(0);
            for (int v = t; prev[v] != -1; v = prev[v])
              top = std::max(top, edge_cost[{prev[v], v}]);
            flat.push_back(rational_str(top));
          }
        reductions.insert(flat);
      }
      CHECK(reductions.size() == 1);
      // And the library's answer matches that unique reduction.
      McstInstance r = irreducible_matrix(m);
      std::vector<std::string> flat;
      for (int s = 0; s < nodes; ++s)
        for (int t = 0; t < nodes; ++t) flat.push_back(rational_str(r.cost[s][t]));
      CHECK(reductions.count(flat) == 1);
    }
  }
}

TEST_CASE("bird allocation") {
  McstInstance inst = two_agent_instance();
  Allocation bird = bird_allocation(inst);
  CHECK(bird.payoffs == std::vector<Rational>{rat(-3), rat(-4)});
  CHECK(anti_core_membership(mcst_optimistic(inst), bird).member);
  CHECK(core_membership(mcst_pessimistic(inst), bird).member);

  SUBCASE("star instance pays direct edges") {
    McstInstance star;
    star.cost = {{rat(0), rat(1), rat(2)}, {rat(1), rat(0), rat(9)}, {rat(2), rat(9), rat(0)}};
    CHECK(bird_allocation(star).payoffs == std::vector<Rational>{rat(-1), rat(-2)});
  }
  SUBCASE("single agent pays its only edge") {
    McstInstance solo;
    solo.cost = {{rat(0), rat(7)}, {rat(7), rat(0)}};
    CHECK(bird_allocation(solo).payoffs == std::vector<Rational>{rat(-7)});
  }
  SUBCASE("membership across random instances") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 25; ++trial) {
      McstInstance m = gen::mcst(rng, 5);
      Allocation b = bird_allocation(m);
      CHECK(anti_core_membership(mcst_optimistic(m), b).member);
      CHECK(core_membership(mcst_pessimistic(m), b).member);
    }
  }
}

TEST_CASE("irreducible core audit") {
  SUBCASE("two-agent instance") {
    auto audit = irreducible_core_audit(two_agent_instance());
    CHECK(audit.dual);
    CHECK(audit.optimistic_unchanged);
    CHECK(audit.lp_extreme_points_agree);
  }
  SUBCASE("uniform costs") {
    McstInstance u;
    u.cost.assign(4, std::vector<Rational>(4, rat(2)));
    for (int i = 0; i < 4; ++i) u.cost[i][i] = 0;
    auto audit = irreducible_core_audit(u);
    CHECK(audit.dual);
    CHECK(audit.optimistic_unchanged);
    CHECK(audit.lp_extreme_points_agree);
  }
  SUBCASE("random instances") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 12; ++trial) {
      auto audit = irreducible_core_audit(gen::mcst(rng, 4));
      INFO("trial ", trial, " ", audit.detail);
      CHECK(audit.dual);
      CHECK(audit.optimistic_unchanged);
      CHECK(audit.lp_extreme_points_agree);
    }
  }
}

TEST_CASE("mcst staged adapter matches the closed forms") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    McstInstance m = gen::mcst(rng, 3);
    McstStaged staged(m);
    Engine engine(staged);
    CHECK(engine.v_first() == mcst_pessimistic(m));
    CHECK(engine.v_last(Mode::Min) == mcst_optimistic(m));
    CHECK(engine.v_last(Mode::Max) == mcst_optimistic(m));
    CHECK(engine.v_alpha() == engine.v_first());
    // Outside wiring shape is irrelevant, so no first-moving subset can beat
    // arriving last.
    CHECK(engine.v_optimistic().game == mcst_optimistic(m));
    // A first-moving subset cannot route through peers that connect later,
    // so the literal three-stage minimum may price in commitment friction
    // below the connect-first value; it never exceeds it.
    const int n = m.agent_count();
    for (std::uint32_t mask = 1; mask < coalition_count(n); ++mask)
      CHECK(engine.v_pessimistic().game.value(Coalition(mask)) <=
            engine.v_first().value(Coalition(mask)));
    CHECK(theorem_audit(engine, ExternalityTag::Mixed).all_hold);
  }
}

TEST_CASE("mcst three-stage friction witness") {
  // With the far-away third agent, {1} committing first must wire to the
  // source directly (-10) instead of relaying through 2 (-7).
  McstInstance m;
  m.cost = {{rat(0), rat(10), rat(4), rat(100)},
            {rat(10), rat(0), rat(3), rat(100)},
            {rat(4), rat(3), rat(0), rat(100)},
            {rat(100), rat(100), rat(100), rat(0)}};
  McstStaged staged(m);
  Engine engine(staged);
  CHECK(engine.v_first().value(Coalition(0b011)) == rat(-7));
  CHECK(engine.v_stage(Coalition(0b001), Coalition(0b011), Mode::Min) == rat(-13));
  CHECK(engine.v_pessimistic().game.value(Coalition(0b011)) == rat(-13));
}

TEST_CASE("river doctrine values on the two-location fixture") {
  RiverInstance r = two_location_river();
  CHECK(river_unlimited(r, Coalition(0b10)) == rat(14));
  CHECK(river_sovereignty(r, Coalition(0b10)) == rat(8));
  CHECK(river_last(r, Coalition(0b01)) == rat(0));
  CHECK(river_unlimited(r, Coalition(0b01)) == rat(10));
  CHECK(river_unlimited(r, Coalition(0b11)) == rat(18));

  RiverGames games = river_games(r);
  CHECK(games.pessimistic.value(Coalition(0b01)) == rat(0));
  CHECK(games.pessimistic.value(Coalition(0b10)) == rat(8));
  CHECK(games.pessimistic.value(Coalition(0b11)) == rat(18));

  Allocation di = downstream_incremental(r);
  CHECK(di.payoffs == std::vector<Rational>{rat(10), rat(8)});
}

TEST_CASE("river games against enumeration") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    RiverInstance r = gen::river(rng, 4, 8);
    const int n = r.agent_count();
    const std::uint32_t all = coalition_count(n) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
      const Coalition s(mask);
      CHECK(river_unlimited(r, s) == river_value_by_enumeration(r, s, all));
      Rational ats(0);
      for (Coalition block : consecutive_blocks(s))
        ats += river_value_by_enumeration(r, block, block.mask());
      CHECK(river_sovereignty(r, s) == ats);
    }
  }
}

TEST_CASE("consecutive blocks") {
  auto blocks = consecutive_blocks(Coalition(0b10110));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == Coalition(0b00110));
  CHECK(blocks[1] == Coalition(0b10000));
  int total = 0;
  for (auto b : blocks) total += b.size();
  CHECK(total == Coalition(0b10110).size());
  CHECK(consecutive_blocks(Coalition::empty()).empty());
}

TEST_CASE("river chain and memberships on random instances") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 8; ++trial) {
    RiverInstance r = gen::river(rng, 3, 6);
    const int n = r.agent_count();
    RiverGames games = river_games(r);
    for (std::uint32_t mask = 0; mask < coalition_count(n); ++mask) {
      const Coalition s(mask);
      CHECK(games.pessimistic.value(s) == games.last.value(s));
      CHECK(games.last.value(s) <= games.sovereignty.value(s));
      CHECK(games.sovereignty.value(s) <= games.unlimited.value(s));
      // Trailing consecutive coalitions meet the arrive-last value exactly.
      if (!s.is_empty() && s.contains(n - 1) && consecutive_blocks(s).size() == 1)
        CHECK(games.sovereignty.value(s) == games.last.value(s));
    }
    Allocation di = downstream_incremental(r);
    CHECK(anti_core_membership(games.unlimited, di).member);
    CHECK(core_membership(games.sovereignty, di).member);
    CHECK(core_membership(games.pessimistic, di).member);

    RiverStaged staged(r);
    Engine engine(staged);
    CHECK(engine.v_first() == games.unlimited);
    CHECK(engine.v_optimistic().game == games.unlimited);
    CHECK(theorem_audit(engine, ExternalityTag::Negative).all_hold);
  }
}

TEST_CASE("downstream incremental is the upstream-to-downstream marginal vector") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    RiverInstance r = gen::river(rng, 4, 8);
    const int n = r.agent_count();
    TUGame unlimited(n);
    for (std::uint32_t m = 1; m < coalition_count(n); ++m)
      unlimited.set_value(Coalition(m), river_unlimited(r, Coalition(m)));
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), 0);
    CHECK(downstream_incremental(r) == marginal_vector(unlimited, order));
  }
}

TEST_CASE("river edge cases") {
  SUBCASE("single agent keeps its own water") {
    RiverInstance r;
    r.entries = {2};
    r.marginal_benefits = {{rat(5), rat(3)}};
    CHECK(river_unlimited(r, Coalition(0b1)) == rat(8));
    CHECK(downstream_incremental(r).payoffs == std::vector<Rational>{rat(8)});
  }
  SUBCASE("headwater concentration hands the first agent its full block") {
    RiverInstance r;
    r.entries = {3, 0};
    r.marginal_benefits = {{rat(9), rat(7), rat(5)}, {rat(9), rat(7), rat(5)}};
    Allocation di = downstream_incremental(r);
    CHECK(di.payoffs[0] == rat(21));  // the whole solo surplus
    CHECK(di.payoffs[1] == rat(4));   // 9+7+9 - 21: sharing beats hoarding
    CHECK(river_unlimited(r, Coalition(0b11)) == rat(25));
  }
  SUBCASE("benefit list too short is rejected") {
    RiverInstance r;
    r.entries = {2, 1};
    r.marginal_benefits = {{rat(5), rat(3), rat(1)}, {rat(4)}};
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
  }
}
