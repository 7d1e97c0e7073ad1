#include "coopgame/apps/mcst.hpp"

#include "coopgame/parallel.hpp"
#include "coopgame/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coopgame {

void McstInstance::validate() const {
  const std::size_t m = cost.size();
  if (m < 2) throw std::invalid_argument("need a source and at least one agent");
  for (std::size_t i = 0; i < m; ++i) {
    if (cost[i].size() != m) throw std::invalid_argument("cost matrix must be square");
    for (std::size_t j = 0; j < m; ++j) {
      if (cost[i][j] < 0) throw std::invalid_argument("edge costs must be nonnegative");
      if (cost[i][j] != cost[j][i])
        throw std::invalid_argument("cost matrix must be symmetric");
    }
  }
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[b] = a;
    return true;
  }
};

}  // namespace

SpanningTree mst(const McstInstance& inst, Coalition agents) {
  inst.validate();
  SpanningTree tree;
  tree.agents = agents.members();
  tree.cost = 0;
  std::vector<int> nodes{0};
  for (AgentId a : tree.agents) nodes.push_back(a + 1);

  struct Edge {
    Rational c;
    int i, j;  // node labels, i < j
  };
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      edges.push_back({inst.cost[nodes[a]][nodes[b]], nodes[a], nodes[b]});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.c != y.c) return x.c < y.c;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  });

  const int m = inst.agent_count() + 1;
  UnionFind uf(m);
  std::vector<std::vector<int>> adj(m);
  for (const auto& e : edges)
    if (uf.unite(e.i, e.j)) {
      tree.cost += e.c;
      adj[e.i].push_back(e.j);
      adj[e.j].push_back(e.i);
    }

  // Orient away from the source to read off parents.
  std::vector<int> parent_of(m, -1);
  std::vector<int> stack{0};
  std::vector<bool> seen(m, false);
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        parent_of[v] = u;
        stack.push_back(v);
      }
  }
  for (AgentId a : tree.agents) tree.parent.push_back(parent_of[a + 1]);
  return tree;
}

TUGame mcst_pessimistic(const McstInstance& inst, int jobs) {
  inst.validate();
  const int n = inst.agent_count();
  std::vector<Rational> vals(coalition_count(n), Rational(0));
  parallel_for(1, coalition_count(n), jobs, [&](std::uint32_t m) {
    vals[m] = -mst(inst, Coalition(m)).cost;
  });
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m)
    g.set_value(Coalition(m), std::move(vals[m]));
  return g;
}

TUGame mcst_optimistic(const McstInstance& inst, int jobs) {
  inst.validate();
  const int n = inst.agent_count();
  std::vector<Rational> vals(coalition_count(n), Rational(0));
  parallel_for(1, coalition_count(n), jobs, [&](std::uint32_t m) {
    const Coalition s(m);
    // Contract (N\S) u {0} into the source: node i connects to it at the
    // cheapest edge into any outside node.
    McstInstance sub = inst;
    for (AgentId i : s.members()) {
      Rational best = inst.cost[0][i + 1];
      for (AgentId j : s.complement(n).members())
        best = std::min(best, inst.cost[j + 1][i + 1]);
      sub.cost[0][i + 1] = sub.cost[i + 1][0] = best;
    }
    vals[m] = -mst(sub, s).cost;
  });
  TUGame g(n);
  for (std::uint32_t m = 1; m < coalition_count(n); ++m)
    g.set_value(Coalition(m), std::move(vals[m]));
  return g;
}

McstInstance irreducible_matrix(const McstInstance& inst) {
  inst.validate();
  const int n = inst.agent_count();
  const SpanningTree tree = mst(inst, Coalition::grand(n));
  const int m = n + 1;
  std::vector<int> parent_of(m, -1);
  for (std::size_t k = 0; k < tree.agents.size(); ++k)
    parent_of[tree.agents[k] + 1] = tree.parent[k];

  // Max edge on the tree path between every node pair, by walking roots.
  auto depth = [&](int v) {
    int d = 0;
    for (int u = v; parent_of[u] >= 0; u = parent_of[u]) ++d;
    return d;
  };
  McstInstance out = inst;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int x = a, y = b;
      int dx = depth(x), dy = depth(y);
      Rational top(0);
      auto lift = [&](int& v) {
        top = std::max(top, inst.cost[parent_of[v]][v]);
        v = parent_of[v];
      };
      while (dx > dy) { lift(x); --dx; }
      while (dy > dx) { lift(y); --dy; }
      while (x != y) { lift(x); lift(y); }
      out.cost[a][b] = out.cost[b][a] = top;
    }
  return out;
}

Allocation bird_allocation(const McstInstance& inst) {
  inst.validate();
  const int n = inst.agent_count();
  const SpanningTree tree = mst(inst, Coalition::grand(n));
  Allocation out;
  out.payoffs.assign(n, Rational(0));
  for (std::size_t k = 0; k < tree.agents.size(); ++k)
    out.payoffs[tree.agents[k]] = -inst.cost[tree.parent[k]][tree.agents[k] + 1];
  return out;
}

IrreducibleAudit irreducible_core_audit(const McstInstance& inst) {
  IrreducibleAudit audit;
  const int n = inst.agent_count();
  const McstInstance reduced = irreducible_matrix(inst);
  const TUGame v_opt = mcst_optimistic(inst);
  const TUGame reduced_pes = mcst_pessimistic(reduced);
  const TUGame reduced_opt = mcst_optimistic(reduced);

  auto dual = duality_check(reduced_pes, reduced_opt);
  audit.dual = dual.dual;
  if (!dual.dual) audit.detail += "duality fails at " + dual.witness->to_string() + "; ";

  auto same = game_compare(reduced_opt, v_opt);
  audit.optimistic_unchanged = same.order == GameOrder::Equal;
  if (!audit.optimistic_unchanged) audit.detail += "reduction changed the connect-last game; ";

  // Sampled extreme points: min/max each coordinate over both polytopes and
  // cross-check membership.
  audit.lp_extreme_points_agree = true;
  for (int i = 0; i < n && audit.lp_extreme_points_agree; ++i) {
    std::vector<Rational> obj(n, Rational(0));
    obj[i] = 1;
    for (Sense sense : {Sense::Minimize, Sense::Maximize}) {
      auto a = optimize_over_anticore(v_opt, obj, sense);
      auto c = optimize_over_core(reduced_pes, obj, sense);
      if (!a || !c) {
        audit.lp_extreme_points_agree = false;
        audit.detail += "a polytope came back empty; ";
        break;
      }
      if (!core_membership(reduced_pes, Allocation{a->point}).member ||
          !anti_core_membership(v_opt, Allocation{c->point}).member) {
        audit.lp_extreme_points_agree = false;
        audit.detail += "extreme-point membership failed; ";
        break;
      }
      if (a->value != c->value) {
        audit.lp_extreme_points_agree = false;
        audit.detail += "support values differ; ";
        break;
      }
    }
  }
  return audit;
}

std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(int nodes) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (nodes == 1) return {{}};
  if (nodes == 2) return {{{0, 1}}};
  // Decode every Pruefer sequence of length nodes-2.
  std::vector<int> seq(nodes - 2, 0);
  while (true) {
    std::vector<int> degree(nodes, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> tree;
    std::vector<int> deg = degree;
    std::vector<bool> used(nodes, false);
    for (int v : seq) {
      int leaf = -1;
      for (int u = 0; u < nodes; ++u)
        if (deg[u] == 1 && !used[u]) {
          leaf = u;
          break;
        }
      used[leaf] = true;
      tree.push_back({std::min(leaf, v), std::max(leaf, v)});
      --deg[v];
    }
    std::vector<int> last;
    for (int u = 0; u < nodes; ++u)
      if (!used[u] && deg[u] == 1) last.push_back(u);
    tree.push_back({last[0], last[1]});
    out.push_back(std::move(tree));

    int k = nodes - 3;
    while (k >= 0) {
      if (++seq[k] < nodes) break;
      seq[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

McstStaged::McstStaged(McstInstance instance) : instance_(std::move(instance)) {
  instance_.validate();
  penalty_ = 1;
  for (const auto& row : instance_.cost)
    for (const auto& c : row) penalty_ += c;
  penalty_ *= instance_.agent_count() + 1;
}

namespace {

std::vector<int> parse_connected(const std::string& state) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < state.size()) {
    std::size_t next = state.find(',', pos);
    if (next == std::string::npos) next = state.size();
    out.push_back(std::stoi(state.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::string render_connected(const std::vector<bool>& connected) {
  std::string s;
  for (std::size_t i = 0; i < connected.size(); ++i)
    if (connected[i]) {
      if (!s.empty()) s += ",";
      s += std::to_string(i);
    }
  return s;
}

}  // namespace

std::vector<Move> McstStaged::moves(Coalition coalition, const std::string& state) const {
  const int n = instance_.agent_count();
  std::vector<bool> connected(n, false);
  for (int a : parse_connected(state)) connected[a] = true;
  const auto members = coalition.members();

  std::vector<bool> next_connected = connected;
  for (AgentId i : members) next_connected[i] = true;
  const std::string successor = render_connected(next_connected);

  // Candidate parents per member: the source, any already-connected agent, or
  // another member (cycles among members are filtered below).
  std::vector<std::vector<int>> candidates(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    candidates[k].push_back(0);
    for (int a = 0; a < n; ++a)
      if (connected[a]) candidates[k].push_back(a + 1);
    for (AgentId j : members)
      if (j != members[k]) candidates[k].push_back(j + 1);
  }

  std::vector<Move> out;
  Move idle;
  idle.label = "idle";
  for (std::size_t k = 0; k < members.size(); ++k) {
    idle.member_payoffs.push_back(-penalty_);
    idle.payoff -= penalty_;
  }
  idle.successor = state;
  out.push_back(std::move(idle));

  std::vector<std::size_t> pick(members.size(), 0);
  while (true) {
    // Validity: following parents must reach the source side without cycling
    // through members.
    bool ok = true;
    for (std::size_t k = 0; k < members.size() && ok; ++k) {
      std::size_t cur = k;
      std::vector<bool> seen(members.size(), false);
      while (true) {
        if (seen[cur]) {
          ok = false;
          break;
        }
        seen[cur] = true;
        const int p = candidates[cur][pick[cur]];
        if (p == 0 || connected[p - 1]) break;
        cur = static_cast<std::size_t>(
            std::find(members.begin(), members.end(), p - 1) - members.begin());
      }
    }
    if (ok) {
      Move mv;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const int p = candidates[k][pick[k]];
        const Rational share = -instance_.cost[p][members[k] + 1];
        mv.member_payoffs.push_back(share);
        mv.payoff += share;
        if (k) mv.label += ",";
        mv.label += std::to_string(p) + ">" + std::to_string(members[k] + 1);
      }
      mv.successor = successor;
      out.push_back(std::move(mv));
    }
    int k = static_cast<int>(members.size()) - 1;
    while (k >= 0) {
      if (++pick[k] < candidates[k].size()) break;
      pick[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace coopgame
