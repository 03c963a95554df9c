#include "cradle/reward_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cradle {

RewardGraph::RewardGraph(std::vector<std::string> names, std::vector<RewardEdge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const int n = node_count();
  for (const RewardEdge& e : edges_) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw std::out_of_range("RewardGraph: edge endpoint outside node range");
    }
  }
  std::vector<bool> has_incoming(n, false);
  for (const RewardEdge& e : edges_) has_incoming[e.to] = true;
  for (SkillId i = 0; i < n; ++i) {
    if (!has_incoming[i]) roots_.push_back(i);
  }
}

bool RewardGraph::is_root(SkillId id) const {
  return std::binary_search(roots_.begin(), roots_.end(), id);
}

std::optional<int> RewardGraph::edge_index(SkillId from, SkillId to) const {
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].from == from && edges_[i].to == to) return i;
  }
  return std::nullopt;
}

std::optional<SkillId> RewardGraph::find(const std::string& name) const {
  for (SkillId i = 0; i < node_count(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

namespace {

// Returns one cycle as a node sequence if the graph is not a DAG.
std::optional<std::vector<SkillId>> find_cycle(const RewardGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<SkillId>> adj(n);
  for (const RewardEdge& e : g.edges()) adj[e.from].push_back(e.to);

  enum class Mark { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<SkillId> parent(n, -1);

  for (SkillId start = 0; start < n; ++start) {
    if (mark[start] != Mark::White) continue;
    std::vector<std::pair<SkillId, size_t>> stack{{start, 0}};
    mark[start] = Mark::Grey;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        SkillId v = adj[u][next++];
        if (mark[v] == Mark::Grey) {
          // Walk the grey stack back from u to v to extract the cycle.
          std::vector<SkillId> cycle{v};
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            cycle.push_back(it->first);
            if (it->first == v) break;
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (mark[v] == Mark::White) {
          mark[v] = Mark::Grey;
          stack.emplace_back(v, 0);
        }
      } else {
        mark[u] = Mark::Black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_graph(const RewardGraph& g) {
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.errors.push_back(std::move(msg));
  };

  if (auto cycle = find_cycle(g)) {
    std::ostringstream os;
    os << "cycle detected: ";
    for (size_t i = 0; i < cycle->size(); ++i) {
      os << g.name((*cycle)[i]) << (i + 1 < cycle->size() ? " -> " : "");
    }
    fail(os.str());
  }

  std::set<std::pair<SkillId, SkillId>> seen;
  for (const RewardEdge& e : g.edges()) {
    if (!seen.insert({e.from, e.to}).second) {
      fail("duplicate edge: " + g.name(e.from) + " -> " + g.name(e.to));
      break;
    }
  }

  // BFS from the roots; with cycles present some nodes may be unreachable.
  std::vector<bool> reachable(g.node_count(), false);
  std::queue<SkillId> queue;
  for (SkillId r : g.roots()) {
    reachable[r] = true;
    queue.push(r);
  }
  std::vector<std::vector<SkillId>> adj(g.node_count());
  for (const RewardEdge& e : g.edges()) adj[e.from].push_back(e.to);
  while (!queue.empty()) {
    SkillId u = queue.front();
    queue.pop();
    for (SkillId v : adj[u]) {
      if (!reachable[v]) {
        reachable[v] = true;
        queue.push(v);
      }
    }
  }
  for (SkillId i = 0; i < g.node_count(); ++i) {
    if (!reachable[i]) {
      fail("unreachable node: " + g.name(i));
      break;
    }
  }

  for (const RewardEdge& e : g.edges()) {
    if (!std::isfinite(e.passing_score)) {
      fail("non-finite passing score on edge " + g.name(e.from) + " -> " + g.name(e.to));
      break;
    }
  }

  return report;
}

void update_achievements(const RewardGraph& g, AchievementState& state,
                         const SkillRewardVector& rewards) {
  if (state.size() != g.edge_count() ||
      static_cast<int>(rewards.r.size()) != g.node_count()) {
    throw std::invalid_argument("update_achievements: state/rewards size mismatch");
  }
  std::vector<double>& a = state.mutable_values();
  for (int i = 0; i < g.edge_count(); ++i) {
    const RewardEdge& e = g.edges()[i];
    a[i] = std::max(a[i], rewards.r[e.from] - e.passing_score);
  }
}

double total_reward(const RewardGraph& g, const AchievementState& state,
                    const SkillRewardVector& rewards) {
  if (state.size() != g.edge_count() ||
      static_cast<int>(rewards.r.size()) != g.node_count()) {
    throw std::invalid_argument("total_reward: state/rewards size mismatch");
  }
  for (double r : rewards.r) {
    if (!std::isfinite(r)) throw std::invalid_argument("total_reward: non-finite reward input");
  }
  double total = 0.0;
  for (SkillId root : g.roots()) total += rewards.r[root];
  for (int i = 0; i < g.edge_count(); ++i) {
    total += state.at(i) * rewards.r[g.edges()[i].to];
  }
  return total;
}

std::vector<SkillId> active_skills(const RewardGraph& g, const AchievementState& state) {
  std::set<SkillId> active(g.roots().begin(), g.roots().end());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (state.at(i) > 0.0) active.insert(g.edges()[i].to);
  }
  return {active.begin(), active.end()};
}

RewardGraph make_linear(const std::vector<std::string>& names,
                        const std::vector<double>& passing_scores) {
  if (names.empty() || passing_scores.size() + 1 != names.size()) {
    throw std::invalid_argument("make_linear: need exactly one score per consecutive pair");
  }
  std::vector<RewardEdge> edges;
  edges.reserve(passing_scores.size());
  for (size_t i = 0; i + 1 < names.size(); ++i) {
    edges.push_back({static_cast<SkillId>(i), static_cast<SkillId>(i + 1), passing_scores[i]});
  }
  return RewardGraph(names, edges);
}

ActivationTimes first_activation_times(const RewardGraph& g,
                                       std::span<const AchievementState> history) {
  ActivationTimes times;
  times.step.assign(g.node_count(), std::nullopt);
  for (SkillId r : g.roots()) times.step[r] = 0;
  for (size_t t = 0; t < history.size(); ++t) {
    const AchievementState& state = history[t];
    for (int i = 0; i < g.edge_count(); ++i) {
      const SkillId to = g.edges()[i].to;
      if (!times.step[to].has_value() && state.at(i) > 0.0) {
        times.step[to] = static_cast<long>(t);
      }
    }
  }
  return times;
}

}  // namespace cradle
