#include "coopgame/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coopgame::io {

namespace {

json rat_json(const Rational& r) { return rational_str(r); }

Rational rat_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as integer or \"num/den\" string");
}

std::vector<Rational> rat_vector_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rat_from(item));
  return out;
}

json rat_vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_json(r));
  return out;
}

}  // namespace

json game_to_json(const TUGame& game) {
  json values = json::array();
  for (std::uint32_t m = 1; m < coalition_count(game.agent_count()); ++m) {
    const Rational& v = game.value(Coalition(m));
    values.push_back(json::array(
        {m, v.get_num().get_str(), v.get_den().get_str()}));
  }
  return json{{"n", game.agent_count()}, {"values", values}};
}

TUGame game_from_json(const json& j) {
  TUGame game(j.at("n").get<int>());
  for (const auto& triple : j.at("values")) {
    const std::uint32_t mask = triple.at(0).get<std::uint32_t>();
    mpz_class num(triple.at(1).is_string() ? triple.at(1).get<std::string>()
                                           : triple.at(1).dump());
    mpz_class den(triple.at(2).is_string() ? triple.at(2).get<std::string>()
                                           : triple.at(2).dump());
    if (den == 0) throw std::invalid_argument("zero denominator in game value");
    Rational v(num, den);
    v.canonicalize();
    game.set_value(Coalition(mask), v);
  }
  return game;
}

json allocation_to_json(const Allocation& x) {
  return json{{"payoffs", rat_vector_json(x.payoffs)}};
}

Allocation allocation_from_json(const json& j) {
  return Allocation{rat_vector_from(j.at("payoffs"))};
}

json production_to_json(const ProductionInstance& p) {
  json utils = json::array();
  for (const auto& list : p.marginal_utilities) utils.push_back(rat_vector_json(list));
  return json{{"type", "production"},
              {"marginal_utilities", utils},
              {"marginal_costs",
               {{"prefix", rat_vector_json(p.marginal_cost_prefix)},
                {"tail", rat_json(p.marginal_cost_tail)}}}};
}

ProductionInstance production_from_json(const json& j) {
  ProductionInstance p;
  for (const auto& list : j.at("marginal_utilities"))
    p.marginal_utilities.push_back(rat_vector_from(list));
  p.marginal_cost_prefix = rat_vector_from(j.at("marginal_costs").at("prefix"));
  p.marginal_cost_tail = rat_from(j.at("marginal_costs").at("tail"));
  p.validate();
  return p;
}

json queueing_to_json(const QueueingInstance& q) {
  return json{{"type", "queueing"}, {"waiting_costs", rat_vector_json(q.waiting_costs)}};
}

QueueingInstance queueing_from_json(const json& j) {
  QueueingInstance q{rat_vector_from(j.at("waiting_costs"))};
  q.validate();
  return q;
}

json bankruptcy_to_json(const BankruptcyInstance& b) {
  return json{{"type", "bankruptcy"},
              {"estate", rat_json(b.estate)},
              {"claims", rat_vector_json(b.claims)}};
}

BankruptcyInstance bankruptcy_from_json(const json& j) {
  BankruptcyInstance b{rat_from(j.at("estate")), rat_vector_from(j.at("claims"))};
  b.validate();
  return b;
}

json airport_to_json(const AirportInstance& a) {
  return json{{"type", "airport"},
              {"lengths", a.lengths},
              {"segment_costs", rat_vector_json(a.segment_costs)}};
}

AirportInstance airport_from_json(const json& j) {
  AirportInstance a;
  a.lengths = j.at("lengths").get<std::vector<int>>();
  a.segment_costs = rat_vector_from(j.at("segment_costs"));
  a.validate();
  return a;
}

json mcst_to_json(const McstInstance& m) {
  json rows = json::array();
  for (const auto& row : m.cost) rows.push_back(rat_vector_json(row));
  return json{{"type", "mcst"}, {"cost", rows}};
}

McstInstance mcst_from_json(const json& j) {
  McstInstance m;
  for (const auto& row : j.at("cost")) m.cost.push_back(rat_vector_from(row));
  m.validate();
  return m;
}

json river_to_json(const RiverInstance& r) {
  json benefits = json::array();
  for (const auto& list : r.marginal_benefits) benefits.push_back(rat_vector_json(list));
  return json{{"type", "river"},
              {"entries", r.entries},
              {"marginal_benefits", benefits}};
}

RiverInstance river_from_json(const json& j) {
  RiverInstance r;
  r.entries = j.at("entries").get<std::vector<int>>();
  for (const auto& list : j.at("marginal_benefits"))
    r.marginal_benefits.push_back(rat_vector_from(list));
  r.validate();
  return r;
}

json explicit_to_json(const ExplicitProblem& p) {
  json revenues = json::array();
  for (const auto& list : p.revenues) revenues.push_back(rat_vector_json(list));
  return json{{"type", "explicit"},
              {"actions", p.actions},
              {"revenues", revenues},
              {"feasible_profiles", p.feasible_profiles}};
}

ExplicitProblem explicit_from_json(const json& j) {
  ExplicitProblem p;
  p.actions = j.at("actions").get<std::vector<std::vector<std::string>>>();
  for (const auto& list : j.at("revenues")) p.revenues.push_back(rat_vector_from(list));
  p.feasible_profiles = j.at("feasible_profiles").get<std::vector<std::vector<int>>>();
  p.validate();
  return p;
}

json table_to_json(const GameTable& t) {
  json rows = json::array();
  for (std::uint32_t m = 1; m < coalition_count(t.n); ++m) {
    const Coalition s(m);
    rows.push_back(json{{"coalition", s.to_string()},
                        {"mask", m},
                        {"alpha", rat_json(t.alpha.value(s))},
                        {"beta", rat_json(t.beta.value(s))},
                        {"first", rat_json(t.first.value(s))},
                        {"last_min", rat_json(t.last_min.value(s))},
                        {"last_max", rat_json(t.last_max.value(s))},
                        {"optimistic", rat_json(t.optimistic.value(s))},
                        {"pessimistic", rat_json(t.pessimistic.value(s))},
                        {"optimistic_subset", t.optimistic_subset[m]},
                        {"pessimistic_subset", t.pessimistic_subset[m]}});
  }
  return json{{"n", t.n}, {"rows", rows}};
}

GameTable table_from_json(const json& j) {
  GameTable t;
  t.n = j.at("n").get<int>();
  t.alpha = t.beta = t.first = t.last_min = t.last_max = t.optimistic = t.pessimistic =
      TUGame(t.n);
  t.optimistic_subset.assign(coalition_count(t.n), 0);
  t.pessimistic_subset.assign(coalition_count(t.n), 0);
  for (const auto& row : j.at("rows")) {
    const Coalition s(row.at("mask").get<std::uint32_t>());
    t.alpha.set_value(s, rat_from(row.at("alpha")));
    t.beta.set_value(s, rat_from(row.at("beta")));
    t.first.set_value(s, rat_from(row.at("first")));
    t.last_min.set_value(s, rat_from(row.at("last_min")));
    t.last_max.set_value(s, rat_from(row.at("last_max")));
    t.optimistic.set_value(s, rat_from(row.at("optimistic")));
    t.pessimistic.set_value(s, rat_from(row.at("pessimistic")));
    t.optimistic_subset[s.mask()] = row.at("optimistic_subset").get<std::uint32_t>();
    t.pessimistic_subset[s.mask()] = row.at("pessimistic_subset").get<std::uint32_t>();
  }
  return t;
}

json audit_to_json(const AuditReport& report) {
  json claims = json::array();
  for (const auto& claim : report.claims)
    claims.push_back(json{{"name", claim.name},
                          {"holds", claim.holds},
                          {"detail", claim.detail}});
  return json{{"externality_class", to_string(report.declared)},
              {"all_hold", report.all_hold},
              {"claims", claims}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) { return json::parse(read_file(path)); }

}  // namespace coopgame::io
