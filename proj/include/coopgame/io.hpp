#pragma once

#include <json.hpp>

#include <string>

#include "coopgame/apps/airport.hpp"
#include "coopgame/apps/bankruptcy.hpp"
#include "coopgame/apps/mcst.hpp"
#include "coopgame/apps/production.hpp"
#include "coopgame/apps/queueing.hpp"
#include "coopgame/apps/river.hpp"
#include "coopgame/explicit_problem.hpp"

namespace coopgame::io {

using json = nlohmann::json;

// Rationals travel as "num/den" strings (integers as "num"); masks as numbers.

json game_to_json(const TUGame& game);
TUGame game_from_json(const json& j);

json allocation_to_json(const Allocation& x);
Allocation allocation_from_json(const json& j);

json production_to_json(const ProductionInstance&);
ProductionInstance production_from_json(const json&);
json queueing_to_json(const QueueingInstance&);
QueueingInstance queueing_from_json(const json&);
json bankruptcy_to_json(const BankruptcyInstance&);
BankruptcyInstance bankruptcy_from_json(const json&);
json airport_to_json(const AirportInstance&);
AirportInstance airport_from_json(const json&);
json mcst_to_json(const McstInstance&);
McstInstance mcst_from_json(const json&);
json river_to_json(const RiverInstance&);
RiverInstance river_from_json(const json&);
json explicit_to_json(const ExplicitProblem&);
ExplicitProblem explicit_from_json(const json&);

json table_to_json(const GameTable&);
GameTable table_from_json(const json&);
json audit_to_json(const AuditReport&);

std::string read_file(const std::string& path);
json load_json(const std::string& path);

}  // namespace coopgame::io
