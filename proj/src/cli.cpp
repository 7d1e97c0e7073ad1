#include "coopgame/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "coopgame/instance_gen.hpp"
#include "coopgame/io.hpp"
#include "coopgame/polytope.hpp"

namespace coopgame::cli {

namespace {

using io::json;

struct CommonOpts {
  std::string input;
  std::string format = "table";
  bool audit = true;
  int jobs = 1;
  std::vector<std::string> columns;  // empty = all
};

const std::vector<std::string> kAllColumns = {
    "alpha", "beta", "first", "last_min", "last_max", "optimistic", "pessimistic"};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_audit = true) {
  cmd->add_option("input", opts.input, "instance file (json)")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "worker threads for per-coalition scans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--games", opts.columns, "value functions to print")
      ->delimiter(',')
      ->check(CLI::IsMember(kAllColumns));
  if (with_audit) cmd->add_flag("!--no-audit", opts.audit, "skip the claim audit");
}

int default_jobs() {
  if (const char* env = std::getenv("COOPGAMES_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::vector<std::string> active_columns(const CommonOpts& opts) {
  return opts.columns.empty() ? kAllColumns : opts.columns;
}

const TUGame& table_column(const GameTable& t, const std::string& name) {
  if (name == "alpha") return t.alpha;
  if (name == "beta") return t.beta;
  if (name == "first") return t.first;
  if (name == "last_min") return t.last_min;
  if (name == "last_max") return t.last_max;
  if (name == "optimistic") return t.optimistic;
  return t.pessimistic;
}

void render_table_text(std::ostream& out, const GameTable& t,
                       const std::vector<std::string>& cols) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"coalition"};
  header.insert(header.end(), cols.begin(), cols.end());
  rows.push_back(header);
  for (std::uint32_t m = 1; m < coalition_count(t.n); ++m) {
    const Coalition s(m);
    std::vector<std::string> row{s.to_string()};
    for (const auto& c : cols) row.push_back(rational_str(table_column(t, c).value(s)));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], row[k].size());
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << row[k];
      if (k + 1 < row.size())
        out << std::string(width[k] - row[k].size() + 2, ' ');
    }
    out << "\n";
  }
}

void render_table_csv(std::ostream& out, const GameTable& t,
                      const std::vector<std::string>& cols) {
  out << "coalition,mask";
  for (const auto& c : cols) out << "," << c;
  out << "\n";
  for (std::uint32_t m = 1; m < coalition_count(t.n); ++m) {
    const Coalition s(m);
    out << "\"" << s.to_string() << "\"," << m;
    for (const auto& c : cols) out << "," << rational_str(table_column(t, c).value(s));
    out << "\n";
  }
}

void render_audit_text(std::ostream& out, const AuditReport& report) {
  out << "audit (" << to_string(report.declared) << " externalities): "
      << (report.all_hold ? "all claims hold" : "CLAIM FAILURES") << "\n";
  for (const auto& claim : report.claims) {
    out << "  [" << (claim.holds ? "ok" : "FAIL") << "] " << claim.name;
    if (!claim.detail.empty()) out << "  (" << claim.detail << ")";
    out << "\n";
  }
}

json allocation_json(const Allocation& x) {
  json arr = json::array();
  for (const auto& p : x.payoffs) arr.push_back(rational_str(p));
  return arr;
}

void emit(std::ostream& out, const CommonOpts& opts, const GameTable& table,
          const std::optional<AuditReport>& audit, const json& extras) {
  if (opts.format == "json") {
    json doc{{"table", io::table_to_json(table)}};
    if (audit) doc["audit"] = io::audit_to_json(*audit);
    if (!extras.is_null()) doc["extras"] = extras;
    out << doc.dump(2) << "\n";
    return;
  }
  const auto cols = active_columns(opts);
  if (opts.format == "csv") {
    render_table_csv(out, table, cols);
  } else {
    render_table_text(out, table, cols);
    if (!extras.is_null())
      for (const auto& [key, value] : extras.items())
        out << key << ": " << value.dump() << "\n";
  }
  if (audit && opts.format != "csv") render_audit_text(out, *audit);
}

int finish(const std::optional<AuditReport>& audit) {
  if (audit && !audit->all_hold) return kAuditFailure;
  return kOk;
}

// Shared flow for instances whose table comes from the staged engine.
int run_staged(std::ostream& out, const CommonOpts& opts, const StagedProblem& problem,
               ExternalityTag declared, const json& extras) {
  Engine engine(problem);
  GameTable table = build_game_table(engine);
  std::optional<AuditReport> audit;
  if (opts.audit) audit = theorem_audit(engine, declared);
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

int cmd_production(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::production_from_json(io::load_json(opts.input));
  // The class declaration is only needed (and only defined) when auditing;
  // non-monotone cost schedules can still print their table.
  ProductionProblem problem(inst);
  if (!opts.audit) return run_staged(out, opts, problem, ExternalityTag::Mixed, json());
  return run_staged(out, opts, problem, production_class(inst), json());
}

int cmd_explicit(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::explicit_from_json(io::load_json(opts.input));
  auto klass = classify_externalities(inst);
  ExplicitStaged staged(inst);
  Engine engine(staged);
  GameTable table = build_game_table(engine);

  std::optional<AuditReport> audit;
  if (opts.audit) {
    audit = theorem_audit(engine, klass.tag);
    // Cross-presentation check: the definition-shaped evaluation must agree
    // with the staged route on all seven games.
    ExplicitGames direct = explicit_games(inst);
    const bool agree = direct.alpha == table.alpha && direct.beta == table.beta &&
                       direct.first == table.first && direct.last_min == table.last_min &&
                       direct.last_max == table.last_max &&
                       direct.optimistic.game == table.optimistic &&
                       direct.pessimistic.game == table.pessimistic;
    audit->claims.push_back({"direct evaluation agrees with the staged engine", agree, ""});
    audit->all_hold = audit->all_hold && agree;
  }
  json extras{{"externality_class", to_string(klass.tag)}};
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

int cmd_queueing(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::queueing_from_json(io::load_json(opts.input));
  const int n = inst.agent_count();
  const TUGame opt = queueing_optimistic(inst, opts.jobs);
  const TUGame pes = queueing_pessimistic(inst, opts.jobs);

  json extras{{"minimal_transfer_rule", allocation_json(minimal_transfer_rule(inst))},
              {"maximal_transfer_rule", allocation_json(maximal_transfer_rule(inst))}};

  std::optional<AuditReport> audit;
  GameTable table;
  if (n <= 4) {
    const ExplicitProblem problem = queueing_explicit(inst);
    ExplicitStaged staged(problem);
    Engine engine(staged);
    table = build_game_table(engine);
    if (opts.audit) {
      audit = theorem_audit(engine, classify_externalities(problem).tag);
      const bool match = table.optimistic == opt && table.pessimistic == pes;
      audit->claims.push_back(
          {"closed forms match the staged engine", match, ""});
      audit->all_hold = audit->all_hold && match;
    }
  } else {
    // Closed forms only; the engine table is a small-instance cross-check.
    table.n = n;
    table.alpha = table.pessimistic = table.last_min = table.last_max = pes;
    table.first = table.beta = table.optimistic = opt;
    table.optimistic_subset.assign(coalition_count(n), 0);
    table.pessimistic_subset.assign(coalition_count(n), 0);
    for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
      table.optimistic_subset[m] = m;  // serve-first realizes the optimum
      table.pessimistic_subset[m] = 0;
    }
    if (opts.audit) {
      AuditReport rep;
      rep.declared = ExternalityTag::Negative;
      auto conc = is_concave(opt);
      auto conv = is_convex(pes);
      rep.claims.push_back({"serve-first game is concave", conc.holds, ""});
      rep.claims.push_back({"serve-last game is convex", conv.holds, ""});
      rep.claims.push_back(
          {"minimal transfer rule equals shapley(serve-first)",
           minimal_transfer_rule(inst) == shapley(opt), ""});
      rep.claims.push_back(
          {"maximal transfer rule equals shapley(serve-last)",
           maximal_transfer_rule(inst) == shapley(pes), ""});
      rep.claims.push_back(
          {"minimal transfer rule lies in anti-core(serve-first)",
           anti_core_membership(opt, minimal_transfer_rule(inst)).member, ""});
      rep.claims.push_back(
          {"anti-core(serve-first) within core(serve-last)",
           inclusion_anticore_in_core(opt, pes).holds, ""});
      for (const auto& claim : rep.claims) rep.all_hold = rep.all_hold && claim.holds;
      audit = rep;
    }
  }
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

// Closed-form duality applications share one flow. The explicit encoding is
// built lazily: it is an exponential object, only used for the engine
// cross-check on desk-scale instances.
int run_dual_app(std::ostream& out, const CommonOpts& opts, const TUGame& first,
                 const TUGame& last,
                 const std::function<ExplicitProblem()>& make_encoding,
                 double encoding_size, ExternalityTag expected_class,
                 long profile_budget) {
  const int n = first.agent_count();
  GameTable table;
  std::optional<AuditReport> audit;
  json extras;

  const bool engine_ok = encoding_size <= static_cast<double>(profile_budget) && n <= 5;
  if (engine_ok) {
    const ExplicitProblem encoding = make_encoding();
    ExplicitStaged staged(encoding);
    Engine engine(staged);
    table = build_game_table(engine);
    if (opts.audit) {
      audit = theorem_audit(engine, classify_externalities(encoding).tag);
      const bool match =
          table.first == first && table.last_min == last && table.last_max == last;
      audit->claims.push_back({"closed forms match the staged engine", match, ""});
      auto seq = check_sequential_efficiency(engine);
      audit->claims.push_back({"sequential selfish play is efficient for every coalition",
                               seq.all_sequential, ""});
      audit->claims.push_back({"first-mover and last-mover games are dual",
                               duality_check(first, last).dual, ""});
      for (std::size_t k = audit->claims.size() - 3; k < audit->claims.size(); ++k)
        audit->all_hold = audit->all_hold && audit->claims[k].holds;
    }
  } else {
    table.n = n;
    table.first = table.beta = first;
    table.last_min = table.last_max = last;
    if (expected_class == ExternalityTag::Negative) {
      table.alpha = last;  // adversaries can always force the arrive-last value
      table.optimistic = first;
      table.pessimistic = last;
    } else {
      table.alpha = first;
      table.optimistic = last;
      table.pessimistic = first;
    }
    table.optimistic_subset.assign(coalition_count(n), 0);
    table.pessimistic_subset.assign(coalition_count(n), 0);
    if (opts.audit) {
      AuditReport rep;
      rep.declared = expected_class;
      rep.claims.push_back({"first-mover and last-mover games are dual",
                            duality_check(first, last).dual, ""});
      for (const auto& claim : rep.claims) rep.all_hold = rep.all_hold && claim.holds;
      audit = rep;
    }
  }
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

int cmd_bankruptcy(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::bankruptcy_from_json(io::load_json(opts.input));
  // Action count per claimant on the gcd grid, as a size estimate.
  Rational grid = inst.estate;
  for (const auto& c : inst.claims) grid = rational_gcd(grid, c);
  double size = 1;
  if (grid > 0)
    for (const auto& c : inst.claims) {
      Rational cap = std::min(c, inst.estate);
      size *= 1 + Rational(cap / grid).get_d();
    }
  return run_dual_app(out, opts, bankruptcy_first(inst), bankruptcy_last(inst),
                      [&] { return bankruptcy_explicit(inst); }, size,
                      ExternalityTag::Negative, 100000);
}

int cmd_airport(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::airport_from_json(io::load_json(opts.input));
  const double top = inst.max_length();
  const double per_agent = 2 + top * (top + 1) / 2;
  double size = 1;
  for (int i = 0; i < inst.agent_count(); ++i) size *= per_agent;
  return run_dual_app(out, opts, airport_first(inst), airport_last(inst),
                      [&] { return airport_explicit(inst); }, size,
                      ExternalityTag::Positive, 100000);
}

int cmd_mcst(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::mcst_from_json(io::load_json(opts.input));
  const int n = inst.agent_count();
  const TUGame pes = mcst_pessimistic(inst, opts.jobs);
  const TUGame opt = mcst_optimistic(inst, opts.jobs);

  auto reduced = irreducible_matrix(inst);
  json extras{{"bird_allocation", allocation_json(bird_allocation(inst))},
              {"irreducible_cost_matrix", io::mcst_to_json(reduced).at("cost")}};

  GameTable table;
  std::optional<AuditReport> audit;
  if (n <= 3) {
    McstStaged staged(inst);
    Engine engine(staged);
    table = build_game_table(engine);
    if (opts.audit) {
      // The staged presentation carries commitment friction in the raw
      // three-stage minimum (an early mover cannot route through peers wired
      // later), so only the class-independent claims plus the identities that
      // do transfer are audited here.
      audit = theorem_audit(engine, ExternalityTag::Mixed);
      auto add = [&](std::string name, bool holds) {
        audit->all_hold = audit->all_hold && holds;
        audit->claims.push_back({std::move(name), holds, ""});
      };
      add("closed forms match the staged engine",
          table.first == pes && table.last_min == opt && table.last_max == opt &&
              table.optimistic == opt);
      add("adversaries cannot hurt a coalition beyond inactivity",
          table.alpha == table.first);
      add("connect-first below connect-last",
          game_compare(table.first, table.last_min).order != GameOrder::GreaterEq &&
              game_compare(table.first, table.last_min).order != GameOrder::Incomparable);
    }
  } else {
    table.n = n;
    table.first = table.beta = table.pessimistic = table.alpha = pes;
    table.last_min = table.last_max = table.optimistic = opt;
    table.optimistic_subset.assign(coalition_count(n), 0);
    table.pessimistic_subset.assign(coalition_count(n), 0);
    for (std::uint32_t m = 1; m < coalition_count(n); ++m) table.pessimistic_subset[m] = m;
    if (opts.audit) audit = AuditReport{ExternalityTag::Positive, {}, true};
  }
  if (audit) {
    auto ir = irreducible_core_audit(inst);
    auto add = [&](std::string name, bool holds, std::string detail = "") {
      audit->all_hold = audit->all_hold && holds;
      audit->claims.push_back({std::move(name), holds, std::move(detail)});
    };
    add("reduced first/last games are dual", ir.dual, ir.detail);
    add("reduction preserves the connect-last game", ir.optimistic_unchanged);
    add("sampled extreme points cross-validate", ir.lp_extreme_points_agree);
    add("bird allocation lies in anti-core(connect-last)",
        anti_core_membership(opt, bird_allocation(inst)).member);
    add("bird allocation lies in core(connect-first)",
        core_membership(pes, bird_allocation(inst)).member);
  }
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

int cmd_river(std::ostream& out, const CommonOpts& opts) {
  auto inst = io::river_from_json(io::load_json(opts.input));
  const int n = inst.agent_count();

  RiverStaged staged(inst);
  Engine engine(staged);
  GameTable table = build_game_table(engine);

  TUGame unlimited(n), sovereignty(n), last(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    unlimited.set_value(s, river_unlimited(inst, s));
    sovereignty.set_value(s, river_sovereignty(inst, s));
    last.set_value(s, river_last(inst, s));
  }

  json rows = json::array();
  for (std::uint32_t m = 1; m < coalition_count(n); ++m) {
    const Coalition s(m);
    rows.push_back(json{{"coalition", s.to_string()},
                        {"unlimited", rational_str(unlimited.value(s))},
                        {"sovereignty", rational_str(sovereignty.value(s))},
                        {"last", rational_str(last.value(s))},
                        {"pessimistic", rational_str(table.pessimistic.value(s))}});
  }
  Allocation di = downstream_incremental(inst);
  json extras{{"doctrine_table", rows}, {"downstream_incremental", allocation_json(di)}};

  std::optional<AuditReport> audit;
  if (opts.audit) {
    audit = theorem_audit(engine, ExternalityTag::Negative);
    auto add = [&](std::string name, bool holds) {
      audit->all_hold = audit->all_hold && holds;
      audit->claims.push_back({std::move(name), holds, ""});
    };
    auto below = [](const TUGame& a, const TUGame& b) {
      auto ord = game_compare(a, b).order;
      return ord == GameOrder::Equal || ord == GameOrder::LessEq;
    };
    add("through-flow game equals first-mover",
        game_compare(unlimited, table.first).order == GameOrder::Equal);
    add("arrive-last game equals last-mover",
        game_compare(last, table.last_min).order == GameOrder::Equal);
    add("pessimistic equals arrive-last",
        game_compare(table.pessimistic, last).order == GameOrder::Equal);
    add("arrive-last <= own-entry <= through-flow",
        below(last, sovereignty) && below(sovereignty, unlimited));
    add("downstream incremental lies in anti-core(through-flow)",
        anti_core_membership(unlimited, di).member);
    add("downstream incremental lies in core(own-entry)",
        core_membership(sovereignty, di).member);
    add("downstream incremental lies in core(pessimistic)",
        core_membership(table.pessimistic, di).member);
  }
  emit(out, opts, table, audit, extras);
  return finish(audit);
}

int cmd_shapley(std::ostream& out, const CommonOpts& opts) {
  TUGame game = io::game_from_json(io::load_json(opts.input));
  Allocation sh = shapley(game);
  if (opts.format == "json") {
    out << json{{"shapley", allocation_json(sh)}}.dump(2) << "\n";
  } else {
    for (int i = 0; i < sh.size(); ++i)
      out << "agent " << (i + 1) << ": " << rational_str(sh.payoffs[i]) << "\n";
  }
  return kOk;
}

int cmd_polytope(std::ostream& out, const CommonOpts& opts, bool core,
                 const std::string& point_arg) {
  TUGame game = io::game_from_json(io::load_json(opts.input));

  if (!point_arg.empty()) {
    Allocation x;
    std::stringstream ss(point_arg);
    std::string item;
    while (std::getline(ss, item, ',')) x.payoffs.push_back(parse_rational(item));
    auto res = core ? core_membership(game, x) : anti_core_membership(game, x);
    json doc{{"member", res.member}};
    if (res.violated) doc["violated"] = res.violated->to_string();
    out << doc.dump(2) << "\n";
    return kOk;
  }

  CoreReport report = core ? core_nonempty(game) : anti_core_nonempty(game);
  json doc{{"nonempty", report.nonempty}};
  if (report.point) doc["point"] = allocation_json(*report.point);
  if (report.certificate) {
    json weights = json::array();
    for (const auto& [mask, lambda] : report.certificate->weights)
      weights.push_back(json::array({Coalition(mask).to_string(), rational_str(lambda)}));
    doc["certificate"] = weights;
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_gen(std::ostream& out, const std::string& kind, int n, unsigned long seed,
            int water) {
  gen::Rng rng(seed);
  json doc;
  if (kind == "queueing") doc = io::queueing_to_json(gen::queueing(rng, n));
  else if (kind == "production-drs") doc = io::production_to_json(gen::production(rng, n, false));
  else if (kind == "production-irs") doc = io::production_to_json(gen::production(rng, n, true));
  else if (kind == "bankruptcy") doc = io::bankruptcy_to_json(gen::bankruptcy(rng, n));
  else if (kind == "airport") doc = io::airport_to_json(gen::airport(rng, n));
  else if (kind == "mcst") doc = io::mcst_to_json(gen::mcst(rng, n));
  else if (kind == "river") doc = io::river_to_json(gen::river(rng, n, water));
  else doc = io::explicit_to_json(gen::explicit_problem(rng, n, 4));
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coalitional value functions, cores and anti-cores for staged problems"};
  app.require_subcommand(1);

  CommonOpts production_opts, explicit_opts, queueing_opts, bankruptcy_opts,
      airport_opts, mcst_opts, river_opts, shapley_opts, core_opts, anticore_opts;
  production_opts.jobs = explicit_opts.jobs = queueing_opts.jobs = bankruptcy_opts.jobs =
      airport_opts.jobs = mcst_opts.jobs = river_opts.jobs = default_jobs();

  auto* c_production = app.add_subcommand("production", "joint production instance");
  add_common(c_production, production_opts);
  auto* c_explicit = app.add_subcommand("explicit", "explicit action/profile instance");
  add_common(c_explicit, explicit_opts);
  auto* c_queueing = app.add_subcommand("queueing", "single-machine queueing instance");
  add_common(c_queueing, queueing_opts);
  auto* c_bankruptcy = app.add_subcommand("bankruptcy", "estate division instance");
  add_common(c_bankruptcy, bankruptcy_opts);
  auto* c_airport = app.add_subcommand("airport", "runway cost-sharing instance");
  add_common(c_airport, airport_opts);
  auto* c_mcst = app.add_subcommand("mcst", "minimum cost spanning tree instance");
  add_common(c_mcst, mcst_opts);
  auto* c_river = app.add_subcommand("river", "river sharing instance");
  add_common(c_river, river_opts);

  auto* c_shapley = app.add_subcommand("shapley", "shapley value of a serialized game");
  add_common(c_shapley, shapley_opts, false);
  std::string core_point, anticore_point;
  auto* c_core = app.add_subcommand("core", "core of a serialized game");
  add_common(c_core, core_opts, false);
  c_core->add_option("--point", core_point, "membership check for x1,x2,...");
  auto* c_anticore = app.add_subcommand("anticore", "anti-core of a serialized game");
  add_common(c_anticore, anticore_opts, false);
  c_anticore->add_option("--point", anticore_point, "membership check for x1,x2,...");

  std::string gen_kind = "queueing";
  int gen_n = 3;
  int gen_water = 6;
  unsigned long gen_seed = 1;
  auto* c_gen = app.add_subcommand("gen", "emit a seeded random instance");
  c_gen->add_option("--kind", gen_kind, "instance family")
      ->check(CLI::IsMember({"queueing", "production-drs", "production-irs", "bankruptcy",
                             "airport", "mcst", "river", "explicit"}))
      ->capture_default_str();
  c_gen->add_option("--n", gen_n, "maximum agent count")->check(CLI::PositiveNumber);
  c_gen->add_option("--seed", gen_seed, "rng seed");
  c_gen->add_option("--water", gen_water, "river: maximum total water");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (c_production->parsed()) return cmd_production(out, production_opts);
    if (c_explicit->parsed()) return cmd_explicit(out, explicit_opts);
    if (c_queueing->parsed()) return cmd_queueing(out, queueing_opts);
    if (c_bankruptcy->parsed()) return cmd_bankruptcy(out, bankruptcy_opts);
    if (c_airport->parsed()) return cmd_airport(out, airport_opts);
    if (c_mcst->parsed()) return cmd_mcst(out, mcst_opts);
    if (c_river->parsed()) return cmd_river(out, river_opts);
    if (c_shapley->parsed()) return cmd_shapley(out, shapley_opts);
    if (c_core->parsed()) return cmd_polytope(out, core_opts, true, core_point);
    if (c_anticore->parsed()) return cmd_polytope(out, anticore_opts, false, anticore_point);
    if (c_gen->parsed()) return cmd_gen(out, gen_kind, gen_n, gen_seed, gen_water);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    // Internal identities are asserted along the way; their failure means a
    // bug, not a property of the instance.
    err << "audit failure: " << e.what() << "\n";
    return kAuditFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "no subcommand\n";
  return kInputError;
}

}  // namespace coopgame::cli
