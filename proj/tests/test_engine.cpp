#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "coopgame/apps/airport.hpp"
#include "coopgame/apps/production.hpp"
#include "coopgame/apps/queueing.hpp"
#include "coopgame/explicit_problem.hpp"
#include "coopgame/instance_gen.hpp"
#include "test_util.hpp"

using namespace coopgame;

namespace {

// Independent oracle for production instances: recursive enumeration over
// per-member quantities, incremental-cost payments, no engine machinery.
struct ProdOracle {
  const ProductionInstance& inst;

  std::vector<std::vector<long>> combos(const std::vector<AgentId>& members) const {
    std::vector<std::vector<long>> out{{}};
    for (AgentId i : members) {
      std::vector<std::vector<long>> next;
      for (const auto& prefix : out)
        for (long q = 0; q <= static_cast<long>(inst.marginal_utilities[i].size()); ++q) {
          auto row = prefix;
          row.push_back(q);
          next.push_back(std::move(row));
        }
      out = std::move(next);
    }
    return out;
  }

  Rational value_of(const std::vector<AgentId>& members, const std::vector<long>& qs,
                    long produced) const {
    long total = 0;
    Rational utility(0);
    for (std::size_t k = 0; k < members.size(); ++k) {
      total += qs[k];
      utility += inst.utility(members[k], qs[k]);
    }
    return utility - (inst.total_cost(produced + total) - inst.total_cost(produced));
  }

  Rational best(Coalition who, long produced) const {
    if (who.is_empty()) return Rational(0);
    const auto members = who.members();
    std::optional<Rational> top;
    for (const auto& qs : combos(members)) {
      Rational v = value_of(members, qs, produced);
      if (!top || v > *top) top = v;
    }
    return *top;
  }

  std::vector<long> totals_of_maximizers(Coalition who, long produced) const {
    if (who.is_empty()) return {0};
    const auto members = who.members();
    const Rational top = best(who, produced);
    std::vector<long> totals;
    for (const auto& qs : combos(members))
      if (value_of(members, qs, produced) == top) {
        long t = 0;
        for (long q : qs) t += q;
        totals.push_back(t);
      }
    return totals;
  }

  // T first, outside best-responds, rest of S last.
  Rational stage(Coalition t, Coalition s, bool maximize) const {
    const int n = inst.agent_count();
    const Coalition outside = s.complement(n);
    const Coalition rest = s.minus(t);
    const auto t_members = t.members();
    std::optional<Rational> overall;
    for (const auto& qs : combos(t_members)) {
      long t_total = 0;
      for (long q : qs) t_total += q;
      const Rational t_value = value_of(t_members, qs, 0);
      std::optional<Rational> picked;
      for (long mid : totals_of_maximizers(outside, t_total)) {
        const Rational tail = best(rest, t_total + mid);
        if (!picked || (maximize ? tail > *picked : tail < *picked)) picked = tail;
      }
      const Rational total = t_value + *picked;
      if (!overall || total > *overall) overall = total;
    }
    return *overall;
  }

  Rational optimistic(Coalition s) const {
    std::optional<Rational> top;
    for (std::uint32_t sub : submasks_ascending(s.mask())) {
      Rational v = stage(Coalition(sub), s, true);
      if (!top || v > *top) top = v;
    }
    return *top;
  }

  Rational pessimistic(Coalition s) const {
    std::optional<Rational> low;
    for (std::uint32_t sub : submasks_ascending(s.mask())) {
      Rational v = stage(Coalition(sub), s, false);
      if (!low || v < *low) low = v;
    }
    return *low;
  }
};

void check_column(const TUGame& got, const std::map<std::uint32_t, long>& expected) {
  for (const auto& [mask, value] : expected) {
    INFO("coalition mask ", mask);
    CHECK(got.value(Coalition(mask)) == rat(value));
  }
}

ExplicitProblem mixed_problem() {
  // Outsider action "a" removes agent 1's action x; outsider action "b"
  // removes x but unlocks y.
  ExplicitProblem p;
  p.actions = {{"null", "x", "y"}, {"null", "a", "b"}};
  p.revenues = {{rat(0), rat(3), rat(5)}, {rat(0), rat(2), rat(1)}};
  p.feasible_profiles = {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {2, 2}};
  return p;
}

}  // namespace

TEST_CASE("decreasing-returns fixture reproduces the whole table") {
  ProductionProblem problem(production_decreasing_returns_fixture());
  Engine engine(problem);
  CHECK(production_class(problem.instance()) == ExternalityTag::Negative);

  GameTable t = build_game_table(engine);
  check_column(t.alpha, {{1, 0}, {2, 0}, {4, 0}, {3, 0}, {5, 0}, {6, 0}, {7, 34}});
  check_column(t.last_min, {{1, 1}, {2, 9}, {4, 11}, {3, 12}, {5, 17}, {6, 24}, {7, 34}});
  check_column(t.last_max, {{1, 2}, {2, 9}, {4, 13}, {3, 12}, {5, 17}, {6, 24}, {7, 34}});
  check_column(t.first, {{1, 8}, {2, 17}, {4, 21}, {3, 21}, {5, 24}, {6, 32}, {7, 34}});
  CHECK(t.beta == t.first);
  // Negative externalities: optimistic is first-mover, pessimistic last-mover.
  CHECK(game_compare(t.optimistic, t.first).order == GameOrder::Equal);
  CHECK(game_compare(t.pessimistic, t.last_min).order == GameOrder::Equal);
}

TEST_CASE("decreasing-returns fixture: maximizer sets and stage values") {
  ProductionProblem problem(production_decreasing_returns_fixture());
  Engine engine(problem);

  SUBCASE("the pair {2,3} has exactly the two optimal plans") {
    const auto& maxima = engine.maximizer_set(Coalition(0b110), "0");
    REQUIRE(maxima.size() == 2);
    CHECK(maxima[0].payoff == rat(32));
    CHECK(maxima[0].label == "q=2,2");
    CHECK(maxima[1].label == "q=2,3");
  }
  SUBCASE("single feasible move is its own maximizer") {
    ProductionInstance tiny;
    tiny.marginal_utilities = {{rat(0)}};
    tiny.marginal_cost_prefix = {rat(5)};
    tiny.marginal_cost_tail = rat(5);
    ProductionProblem tp(tiny);
    Engine te(tp);
    CHECK(te.maximizer_set(Coalition(0b1), "0").size() == 1);
  }
  SUBCASE("stage reductions") {
    CHECK(engine.v_stage(Coalition::empty(), Coalition(0b001), Mode::Min) == rat(1));
    CHECK(engine.v_stage(Coalition(0b110), Coalition(0b110), Mode::Min) == rat(32));
    CHECK(engine.v_stage(Coalition(0b110), Coalition(0b110), Mode::Max) == rat(32));
  }
}

TEST_CASE("increasing-returns fixture reproduces the derived table") {
  ProductionProblem problem(production_increasing_returns_fixture());
  Engine engine(problem);
  CHECK(production_class(problem.instance()) == ExternalityTag::Positive);

  GameTable t = build_game_table(engine);
  check_column(t.first, {{1, 0}, {2, 0}, {4, 0}, {3, 0}, {5, 0}, {6, 8}, {7, 15}});
  check_column(t.last_min, {{1, 7}, {2, 0}, {4, 0}, {3, 0}, {5, 0}, {6, 8}, {7, 15}});
  CHECK(t.last_max == t.last_min);
  // Optimistic values: {1,2} and {2,3} beat both bounds; {1,3} tops out at 7
  // by exhaustive enumeration (T={1} consuming both units).
  check_column(t.optimistic, {{1, 7}, {2, 0}, {4, 0}, {3, 8}, {5, 7}, {6, 10}, {7, 15}});
  CHECK(t.optimistic_subset[0b110] == 0b100);
  CHECK(t.optimistic_subset[0b011] == 0b001);
  CHECK(t.optimistic_subset[0b101] == 0b001);
  // Positive externalities: pessimistic is the first-mover game.
  CHECK(game_compare(t.pessimistic, t.first).order == GameOrder::Equal);
  CHECK(game_compare(t.alpha, t.first).order == GameOrder::Equal);

  SUBCASE("the three-stage route for {3} inside {2,3}") {
    CHECK(engine.v_stage(Coalition(0b100), Coalition(0b110), Mode::Min) == rat(10));
    CHECK(engine.v_stage(Coalition(0b100), Coalition(0b110), Mode::Max) == rat(10));
  }
  SUBCASE("strict gap between optimistic and last-mover at {2,3}") {
    CHECK(t.optimistic.value(Coalition(0b110)) > t.last_max.value(Coalition(0b110)));
  }
}

TEST_CASE("independent production oracle agrees with the engine") {
  for (bool increasing : {false, true}) {
    ProductionInstance inst = increasing ? production_increasing_returns_fixture()
                                         : production_decreasing_returns_fixture();
    if (!increasing) {
      // Trim the padded fixture so the oracle stays fast; the trim only
      // affects the adversarial column, which is not compared here.
      for (auto& list : inst.marginal_utilities)
        while (list.size() > 3) list.pop_back();
    }
    ProductionProblem problem(inst);
    Engine engine(problem);
    ProdOracle oracle{inst};
    const int n = inst.agent_count();
    for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
      const Coalition s(m);
      INFO("mask ", m, " increasing ", increasing);
      CHECK(engine.v_optimistic().game.value(s) == oracle.optimistic(s));
      CHECK(engine.v_pessimistic().game.value(s) == oracle.pessimistic(s));
      CHECK(engine.v_first().value(s) == oracle.best(s, 0));
    }
  }
}

TEST_CASE("grand optimum and witness on the decreasing-returns fixture") {
  ProductionProblem problem(production_decreasing_returns_fixture());
  Engine engine(problem);
  CHECK(engine.grand_value() == rat(34));
  CHECK(engine.grand_move().label == "q=1,2,2");

  auto witness = anticore_witness(engine);
  CHECK(witness.x.payoffs == std::vector<Rational>{rat(6), rat(15), rat(13)});
  CHECK(witness.in_anticore);
}

TEST_CASE("witness on a single agent is the grand value") {
  ProductionInstance inst;
  inst.marginal_utilities = {{rat(9), rat(4)}};
  inst.marginal_cost_prefix = {rat(1)};
  inst.marginal_cost_tail = rat(1);
  ProductionProblem problem(inst);
  Engine engine(problem);
  auto witness = anticore_witness(engine);
  CHECK(witness.x.payoffs == std::vector<Rational>{rat(11)});
  CHECK(witness.in_anticore);
}

TEST_CASE("sequential efficiency reports") {
  SUBCASE("decreasing returns fail at the singleton") {
    ProductionProblem problem(production_decreasing_returns_fixture());
    Engine engine(problem);
    auto report = check_sequential_efficiency(engine);
    CHECK_FALSE(report.all_dual);
    CHECK_FALSE(report.rows[1].dual_min);  // S = {1}: 8 + 24 != 34
    CHECK_FALSE(report.rows[1].sequential_efficient);
  }
  SUBCASE("an additive technology is efficient everywhere") {
    ProductionInstance inst;
    inst.marginal_utilities = {{rat(5)}, {rat(4)}};
    inst.marginal_cost_prefix = {rat(1)};
    inst.marginal_cost_tail = rat(1);
    ProductionProblem problem(inst);
    Engine engine(problem);
    auto report = check_sequential_efficiency(engine);
    CHECK(report.all_sequential);
    CHECK(report.all_dual);
  }
}

TEST_CASE("externality classification") {
  SUBCASE("queueing slots shrink the feasible set") {
    QueueingInstance q{{rat(3), rat(1), rat(2)}};
    auto klass = classify_externalities(queueing_explicit(q));
    CHECK(klass.tag == ExternalityTag::Negative);
    CHECK(klass.ever_shrank);
    CHECK_FALSE(klass.ever_grew);
  }
  SUBCASE("runway prefixes grow the feasible set") {
    AirportInstance a{{1, 2}, {rat(3), rat(2)}};
    auto klass = classify_externalities(airport_explicit(a));
    CHECK(klass.tag == ExternalityTag::Positive);
    CHECK(klass.ever_grew);
    CHECK_FALSE(klass.ever_shrank);
  }
  SUBCASE("constructed mixed instance carries both witnesses") {
    auto klass = classify_externalities(mixed_problem());
    CHECK(klass.tag == ExternalityTag::Mixed);
    REQUIRE(klass.lost.has_value());
    REQUIRE(klass.gained.has_value());
  }
}

TEST_CASE("theorem audit") {
  SUBCASE("decreasing returns: all negative-class claims hold") {
    ProductionProblem problem(production_decreasing_returns_fixture());
    Engine engine(problem);
    auto report = theorem_audit(engine, ExternalityTag::Negative);
    for (const auto& claim : report.claims) {
      INFO(claim.name, " ", claim.detail);
      CHECK(claim.holds);
    }
  }
  SUBCASE("increasing returns: all positive-class claims hold") {
    ProductionProblem problem(production_increasing_returns_fixture());
    Engine engine(problem);
    auto report = theorem_audit(engine, ExternalityTag::Positive);
    for (const auto& claim : report.claims) {
      INFO(claim.name, " ", claim.detail);
      CHECK(claim.holds);
    }
  }
  SUBCASE("one agent collapses every chain") {
    ProductionInstance inst;
    inst.marginal_utilities = {{rat(3), rat(1)}};
    inst.marginal_cost_prefix = {rat(1)};
    inst.marginal_cost_tail = rat(2);
    ProductionProblem problem(inst);
    Engine engine(problem);
    GameTable t = build_game_table(engine);
    const Coalition s(0b1);
    CHECK(t.alpha.value(s) == t.first.value(s));
    CHECK(t.last_min.value(s) == t.first.value(s));
    CHECK(t.optimistic.value(s) == t.first.value(s));
    CHECK(t.pessimistic.value(s) == t.first.value(s));
    CHECK(theorem_audit(engine, ExternalityTag::Negative).all_hold);
    CHECK(theorem_audit(engine, ExternalityTag::Positive).all_hold);
  }
}

TEST_CASE("cross-presentation equivalence, exhaustive for two agents") {
  std::mt19937_64 rng(7);
  // Two agents with two actions each: every feasible set containing the
  // all-null profile, several revenue draws per set.
  for (std::uint32_t fs = 0; fs < 8; ++fs) {
    for (int draw = 0; draw < 3; ++draw) {
      ExplicitProblem p;
      p.actions = {{"null", "a"}, {"null", "b"}};
      p.revenues = {{rat(0), testutil::random_rational(rng, -4, 6, 2)},
                    {rat(0), testutil::random_rational(rng, -4, 6, 2)}};
      p.feasible_profiles = {{0, 0}};
      if (fs & 1u) p.feasible_profiles.push_back({1, 0});
      if (fs & 2u) p.feasible_profiles.push_back({0, 1});
      if (fs & 4u) p.feasible_profiles.push_back({1, 1});
      ExplicitGames direct = explicit_games(p);
      ExplicitStaged staged(p);
      Engine engine(staged);
      CHECK(direct.alpha == engine.v_alpha());
      CHECK(direct.beta == engine.v_beta());
      CHECK(direct.first == engine.v_first());
      CHECK(direct.last_min == engine.v_last(Mode::Min));
      CHECK(direct.last_max == engine.v_last(Mode::Max));
      CHECK(direct.optimistic.game == engine.v_optimistic().game);
      CHECK(direct.pessimistic.game == engine.v_pessimistic().game);
      CHECK(direct.optimistic.realizer == engine.v_optimistic().realizer);
      CHECK(direct.pessimistic.realizer == engine.v_pessimistic().realizer);
    }
  }
}

TEST_CASE("cross-presentation equivalence on random three-agent problems") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    ExplicitProblem p = gen::explicit_problem(rng, 3, 3);
    ExplicitGames direct = explicit_games(p);
    ExplicitStaged staged(p);
    Engine engine(staged);
    INFO("trial ", trial);
    CHECK(direct.alpha == engine.v_alpha());
    CHECK(direct.beta == engine.v_beta());
    CHECK(direct.first == engine.v_first());
    CHECK(direct.last_min == engine.v_last(Mode::Min));
    CHECK(direct.last_max == engine.v_last(Mode::Max));
    CHECK(direct.optimistic.game == engine.v_optimistic().game);
    CHECK(direct.pessimistic.game == engine.v_pessimistic().game);
  }
}

TEST_CASE("mixed problems still satisfy the class-independent audit") {
  ExplicitProblem p = mixed_problem();
  ExplicitStaged staged(p);
  Engine engine(staged);
  auto report = theorem_audit(engine, ExternalityTag::Mixed);
  for (const auto& claim : report.claims) {
    INFO(claim.name, " ", claim.detail);
    CHECK(claim.holds);
  }
}

TEST_CASE("all realizing first-mover subsets are exposed") {
  SUBCASE("unique realizer on the increasing-returns fixture") {
    ProductionProblem problem(production_increasing_returns_fixture());
    Engine engine(problem);
    CHECK(engine.realizing_subsets(Coalition(0b110), Mode::Max) ==
          std::vector<std::uint32_t>{0b100});
  }
  SUBCASE("an additive technology is indifferent to the split") {
    ProductionInstance inst;
    inst.marginal_utilities = {{rat(5)}, {rat(4)}};
    inst.marginal_cost_prefix = {rat(1)};
    inst.marginal_cost_tail = rat(1);
    ProductionProblem problem(inst);
    Engine engine(problem);
    CHECK(engine.realizing_subsets(Coalition(0b11), Mode::Max) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
    CHECK(engine.realizing_subsets(Coalition(0b11), Mode::Min) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
  }
}

TEST_CASE("v_stage rejects non-nested coalitions") {
  ProductionProblem problem(production_increasing_returns_fixture());
  Engine engine(problem);
  CHECK_THROWS_AS(engine.v_stage(Coalition(0b001), Coalition(0b110), Mode::Min),
                  std::invalid_argument);
}
