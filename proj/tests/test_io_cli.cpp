#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coopgame/cli.hpp"
#include "coopgame/instance_gen.hpp"
#include "coopgame/io.hpp"
#include "test_util.hpp"

using namespace coopgame;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("coopgames-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const io::json& j) {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << j.dump(2) << "\n";
    return p.string();
  }
};

struct CliResult {
  int exit_code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round-trips") {
  std::mt19937_64 rng(13);
  SUBCASE("games") {
    for (int trial = 0; trial < 10; ++trial) {
      TUGame g = testutil::random_game(rng, 1 + trial % 4);
      CHECK(io::game_from_json(io::game_to_json(g)) == g);
    }
  }
  SUBCASE("allocations") {
    Allocation x{{rat(1, 3), rat(-5), rat(7, 2)}};
    CHECK(io::allocation_from_json(io::allocation_to_json(x)) == x);
  }
  SUBCASE("instances") {
    ProductionInstance prod = production_increasing_returns_fixture();
    auto prod2 = io::production_from_json(io::production_to_json(prod));
    CHECK(prod2.marginal_utilities == prod.marginal_utilities);
    CHECK(prod2.marginal_cost_prefix == prod.marginal_cost_prefix);
    CHECK(prod2.marginal_cost_tail == prod.marginal_cost_tail);

    QueueingInstance q = gen::queueing(rng, 5);
    CHECK(io::queueing_from_json(io::queueing_to_json(q)).waiting_costs == q.waiting_costs);

    BankruptcyInstance b = gen::bankruptcy(rng, 5);
    auto b2 = io::bankruptcy_from_json(io::bankruptcy_to_json(b));
    CHECK(b2.estate == b.estate);
    CHECK(b2.claims == b.claims);

    AirportInstance a = gen::airport(rng, 4);
    auto a2 = io::airport_from_json(io::airport_to_json(a));
    CHECK(a2.lengths == a.lengths);
    CHECK(a2.segment_costs == a.segment_costs);

    McstInstance m = gen::mcst(rng, 4);
    CHECK(io::mcst_from_json(io::mcst_to_json(m)).cost == m.cost);

    RiverInstance r = gen::river(rng, 4, 8);
    auto r2 = io::river_from_json(io::river_to_json(r));
    CHECK(r2.entries == r.entries);
    CHECK(r2.marginal_benefits == r.marginal_benefits);

    ExplicitProblem e = gen::explicit_problem(rng, 3, 4);
    auto e2 = io::explicit_from_json(io::explicit_to_json(e));
    CHECK(e2.actions == e.actions);
    CHECK(e2.revenues == e.revenues);
    CHECK(e2.feasible_profiles == e.feasible_profiles);
  }
  SUBCASE("game table") {
    ProductionProblem problem(production_increasing_returns_fixture());
    Engine engine(problem);
    GameTable t = build_game_table(engine);
    GameTable back = io::table_from_json(io::table_to_json(t));
    CHECK(back.first == t.first);
    CHECK(back.alpha == t.alpha);
    CHECK(back.optimistic == t.optimistic);
    CHECK(back.pessimistic == t.pessimistic);
    CHECK(back.optimistic_subset == t.optimistic_subset);
  }
  SUBCASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(io::game_from_json(io::json::parse(
                        R"({"n":1,"values":[[1,"1","0"]]})")),
                    std::invalid_argument);
  }
}

TEST_CASE("cli: emitted json re-parses into identical values") {
  TempDir tmp;
  std::string path = tmp.file("prod.json",
                              io::production_to_json(production_increasing_returns_fixture()));
  auto res = run_cli({"production", path, "--format", "json"});
  REQUIRE(res.exit_code == cli::kOk);
  io::json doc = io::json::parse(res.out);
  GameTable parsed = io::table_from_json(doc.at("table"));

  ProductionProblem problem(production_increasing_returns_fixture());
  Engine engine(problem);
  GameTable direct = build_game_table(engine);
  CHECK(parsed.alpha == direct.alpha);
  CHECK(parsed.beta == direct.beta);
  CHECK(parsed.first == direct.first);
  CHECK(parsed.last_min == direct.last_min);
  CHECK(parsed.last_max == direct.last_max);
  CHECK(parsed.optimistic == direct.optimistic);
  CHECK(parsed.pessimistic == direct.pessimistic);
  CHECK(doc.at("audit").at("all_hold").get<bool>());
}

TEST_CASE("cli: reports are byte-identical across worker counts") {
  TempDir tmp;
  QueueingInstance q{{rat(3), rat(1), rat(2), rat(5), rat(4), rat(7, 2)}};
  std::string qpath = tmp.file("queue.json", io::queueing_to_json(q));
  auto lone = run_cli({"queueing", qpath, "--format", "json", "--jobs", "1"});
  auto four = run_cli({"queueing", qpath, "--format", "json", "--jobs", "4"});
  REQUIRE(lone.exit_code == cli::kOk);
  CHECK(lone.out == four.out);

  std::mt19937_64 rng(3);
  McstInstance m = gen::mcst(rng, 5);
  std::string mpath = tmp.file("mcst.json", io::mcst_to_json(m));
  auto m1 = run_cli({"mcst", mpath, "--format", "json", "--jobs", "1"});
  auto m4 = run_cli({"mcst", mpath, "--format", "json", "--jobs", "4"});
  REQUIRE(m1.exit_code == cli::kOk);
  CHECK(m1.out == m4.out);
}

TEST_CASE("cli: gen is seed-deterministic") {
  auto a = run_cli({"gen", "--kind", "mcst", "--n", "4", "--seed", "11"});
  auto b = run_cli({"gen", "--kind", "mcst", "--n", "4", "--seed", "11"});
  auto c = run_cli({"gen", "--kind", "mcst", "--n", "4", "--seed", "12"});
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  // Generated instances parse back.
  CHECK_NOTHROW(io::mcst_from_json(io::json::parse(a.out)));
}

TEST_CASE("cli: generated instances feed back into their subcommands") {
  TempDir tmp;
  for (std::string kind : {"queueing", "production-drs", "production-irs", "bankruptcy",
                           "airport", "mcst", "river", "explicit"}) {
    auto detail = run_cli({"gen", "--kind", kind, "--n", "3", "--seed", "5"});
    REQUIRE(detail.exit_code == cli::kOk);
    std::string sub = kind.substr(0, kind.find('-'));
    std::string path = tmp.file(kind + ".json", io::json::parse(detail.out));
    auto res = run_cli({sub, path, "--format", "json"});
    INFO(kind, ": ", res.err);
    CHECK(res.exit_code == cli::kOk);
  }
}

TEST_CASE("cli: exit codes and formats") {
  TempDir tmp;
  SUBCASE("missing file is an input error") {
    auto res = run_cli({"production", (tmp.dir / "nope.json").string()});
    CHECK(res.exit_code == cli::kInputError);
    CHECK_FALSE(res.err.empty());
  }
  SUBCASE("malformed schema is an input error") {
    std::string path = tmp.file("bad.json", io::json{{"type", "production"}});
    auto res = run_cli({"production", path});
    CHECK(res.exit_code == cli::kInputError);
  }
  SUBCASE("unknown subcommand is an input error") {
    auto res = run_cli({"frobnicate"});
    CHECK(res.exit_code == cli::kInputError);
  }
  SUBCASE("csv format and column selection") {
    std::string path = tmp.file("q.json", io::queueing_to_json(QueueingInstance{{rat(3), rat(1)}}));
    auto res = run_cli({"queueing", path, "--format", "csv", "--games", "first,last_min"});
    REQUIRE(res.exit_code == cli::kOk);
    std::istringstream lines(res.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "coalition,mask,first,last_min");
  }
  SUBCASE("membership probe through the core subcommand") {
    TUGame add(2);
    add.set_value(Coalition(1), rat(2));
    add.set_value(Coalition(2), rat(5));
    add.set_value(Coalition(3), rat(7));
    std::string path = tmp.file("game.json", io::game_to_json(add));
    auto in_res = run_cli({"core", path, "--point", "2,5"});
    REQUIRE(in_res.exit_code == cli::kOk);
    CHECK(io::json::parse(in_res.out).at("member").get<bool>());
    auto out_res = run_cli({"core", path, "--point", "1,6"});
    CHECK_FALSE(io::json::parse(out_res.out).at("member").get<bool>());
  }
}

TEST_CASE("cli: non-monotone production costs need --no-audit") {
  TempDir tmp;
  ProductionInstance inst;
  inst.marginal_utilities = {{rat(5)}, {rat(4)}};
  inst.marginal_cost_prefix = {rat(1), rat(3), rat(2)};
  inst.marginal_cost_tail = rat(2);
  std::string path = tmp.file("bumpy.json", io::production_to_json(inst));
  CHECK(run_cli({"production", path}).exit_code == cli::kInputError);
  CHECK(run_cli({"production", path, "--no-audit"}).exit_code == cli::kOk);
}

TEST_CASE("cli: certificate surfaces when the anti-core is empty") {
  TempDir tmp;
  TUGame g(3);
  g.set_value(Coalition(0b001), rat(7));
  g.set_value(Coalition(0b111), rat(15));
  std::string path = tmp.file("game.json", io::game_to_json(g));
  auto res = run_cli({"anticore", path});
  REQUIRE(res.exit_code == cli::kOk);
  io::json doc = io::json::parse(res.out);
  CHECK_FALSE(doc.at("nonempty").get<bool>());
  CHECK(doc.contains("certificate"));
}
