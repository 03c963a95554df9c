#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cradle {

// Skill identifiers are dense indices in [0, node_count).
using SkillId = int;

struct RewardEdge {
  SkillId from = 0;
  SkillId to = 0;
  double passing_score = 0.0;
};

// DAG of per-skill reward nodes. Each edge carries a passing score: once the
// predecessor's instantaneous reward exceeds it, the achievement score on
// that edge turns positive and the successor's reward starts contributing to
// the step total. Roots are the nodes with no incoming edge; they contribute
// through a virtual source with permanent unit achievement, otherwise the
// double sum would be identically zero at the start of every episode.
class RewardGraph {
 public:
  RewardGraph() = default;
  // Throws std::out_of_range if an edge endpoint is outside [0, names.size()).
  RewardGraph(std::vector<std::string> names, std::vector<RewardEdge> edges);

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& name(SkillId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<RewardEdge>& edges() const { return edges_; }
  const std::vector<SkillId>& roots() const { return roots_; }
  bool is_root(SkillId id) const;
  // Index into edges() for (from, to), if present.
  std::optional<int> edge_index(SkillId from, SkillId to) const;
  std::optional<SkillId> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<RewardEdge> edges_;
  std::vector<SkillId> roots_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;  // first violation per category
};

// Checks acyclicity, duplicate (from,to) pairs, reachability from roots and
// finiteness of passing scores. Cycle errors name one offending cycle.
ValidationReport validate_graph(const RewardGraph& g);

// Per-edge achievement scores, indexed like RewardGraph::edges(). Starts at
// zero and is non-decreasing within an episode.
class AchievementState {
 public:
  AchievementState() = default;
  explicit AchievementState(const RewardGraph& g) : a_(g.edge_count(), 0.0) {}

  int size() const { return static_cast<int>(a_.size()); }
  double at(int edge_index) const { return a_.at(edge_index); }
  const std::vector<double>& values() const { return a_; }
  void reset() { a_.assign(a_.size(), 0.0); }
  std::vector<double>& mutable_values() { return a_; }

  bool operator==(const AchievementState&) const = default;

 private:
  std::vector<double> a_;
};

// Instantaneous per-skill rewards for the current step, one entry per node.
struct SkillRewardVector {
  std::vector<double> r;
};

// a[i,j] <- max(a[i,j], r[i] - passing_score(i,j)) for every edge.
// Throws std::invalid_argument on size mismatch.
void update_achievements(const RewardGraph& g, AchievementState& state,
                         const SkillRewardVector& rewards);

// Step total: sum of r[k] over roots k plus sum of a[i,j] * r[j] over edges.
// Expects the state already updated for the current step. Throws
// std::invalid_argument on non-finite reward input or size mismatch.
double total_reward(const RewardGraph& g, const AchievementState& state,
                    const SkillRewardVector& rewards);

// Roots plus every node with a positive achievement on some incoming edge.
// Sorted ascending. Diagnostic view; the reward sum already encodes gating.
std::vector<SkillId> active_skills(const RewardGraph& g, const AchievementState& state);

// Chain graph s0 -> s1 -> ... over the given names. Requires
// passing_scores.size() == names.size() - 1 (a single name takes no scores).
RewardGraph make_linear(const std::vector<std::string>& names,
                        const std::vector<double>& passing_scores);

struct ActivationTimes {
  // step.at(skill) is the earliest history index at which the skill was
  // active; roots map to 0; nullopt means never activated.
  std::vector<std::optional<long>> step;
};

// Scans a per-step achievement history (such as a harness log) for the first
// step each skill enters the active set. Roots activate at step 0 even on an
// empty history.
ActivationTimes first_activation_times(const RewardGraph& g,
                                       std::span<const AchievementState> history);

}  // namespace cradle
