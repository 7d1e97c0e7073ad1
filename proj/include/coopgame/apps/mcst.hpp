#pragma once

#include "coopgame/engine.hpp"

namespace coopgame {

/// Connection problem over nodes {0..n} where node 0 is the source; cost is a
/// symmetric nonnegative matrix over all node pairs.
struct McstInstance {
  std::vector<std::vector<Rational>> cost;  // (n+1) x (n+1)

  int agent_count() const { return static_cast<int>(cost.size()) - 1; }
  void validate() const;
};

/// A spanning tree over {0} and the listed agents, rooted at the source.
struct SpanningTree {
  std::vector<AgentId> agents;   // ascending
  std::vector<int> parent;       // parent[k] is the parent node of agents[k]
  Rational cost;
};

/// Deterministic minimum spanning tree over {0} plus `agents`: Kruskal with
/// edges ordered by (cost, endpoints).
SpanningTree mst(const McstInstance& inst, Coalition agents);

/// Connect-first game: v(S) = -mst cost over S u {0}.
TUGame mcst_pessimistic(const McstInstance& inst, int jobs = 1);
/// Connect-last game: outsiders are already wired and act as sources, so every
/// node of (N\S) u {0} is contracted into one source.
TUGame mcst_optimistic(const McstInstance& inst, int jobs = 1);

/// Replace each edge cost by the most expensive edge on the tree path between
/// its endpoints in the minimum spanning tree of all nodes. Entrywise <= cost,
/// same optimum, a fixed point of itself.
McstInstance irreducible_matrix(const McstInstance& inst);

/// Each agent pays the edge to its parent in the deterministic optimal tree.
Allocation bird_allocation(const McstInstance& inst);

struct IrreducibleAudit {
  bool dual = false;               // reduced connect-first/last games are dual
  bool optimistic_unchanged = false;  // reduction preserves the connect-last game
  bool lp_extreme_points_agree = false;
  std::string detail;
};

/// Duality and polytope agreement checks for the reduced matrix; the LP part
/// cross-validates sampled extreme points of A(v_opt) and C(reduced v_pes).
IrreducibleAudit irreducible_core_audit(const McstInstance& inst);

/// Every spanning tree of the complete graph on `nodes` labeled 0..nodes-1,
/// via Pruefer sequences; each tree is an edge list.
std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(int nodes);

/// Staged view. State: set of nodes already wired to the source. A move wires
/// every member into the connected component by choosing parents; staying
/// unwired carries a prohibitive penalty.
class McstStaged : public StagedProblem {
 public:
  explicit McstStaged(McstInstance instance);

  int agent_count() const override { return instance_.agent_count(); }
  std::string initial_state() const override { return ""; }
  std::vector<Move> moves(Coalition coalition, const std::string& state) const override;

 private:
  McstInstance instance_;
  Rational penalty_;
};

}  // namespace coopgame
