#pragma once

#include <random>

#include "coopgame/apps/airport.hpp"
#include "coopgame/apps/bankruptcy.hpp"
#include "coopgame/apps/mcst.hpp"
#include "coopgame/apps/production.hpp"
#include "coopgame/apps/queueing.hpp"
#include "coopgame/apps/river.hpp"
#include "coopgame/explicit_problem.hpp"

namespace coopgame::gen {

/// Seeded, platform-independent draws (mt19937_64 output mapped directly, no
/// std distributions).
using Rng = std::mt19937_64;

long pick(Rng& rng, long lo, long hi);
Rational pick_rational(Rng& rng, long lo, long hi, long max_den = 4);

QueueingInstance queueing(Rng& rng, int max_agents);
/// Non-decreasing marginal costs when `increasing_returns` is false,
/// non-increasing when true.
ProductionInstance production(Rng& rng, int max_agents, bool increasing_returns);
BankruptcyInstance bankruptcy(Rng& rng, int max_agents);
AirportInstance airport(Rng& rng, int max_agents);
McstInstance mcst(Rng& rng, int max_agents);
RiverInstance river(Rng& rng, int max_agents, int max_total_water);
ExplicitProblem explicit_problem(Rng& rng, int max_agents, int max_actions);

}  // namespace coopgame::gen
