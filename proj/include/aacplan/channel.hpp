#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aacplan/rng.hpp"
#include "aacplan/transform.hpp"

namespace aacplan {

/// Communication capabilities of one person plus personalized per-edge
/// accuracy overrides written by the adaptation cycle.
struct UserProfile {
  std::string id;
  std::set<std::string, std::less<>> produces;
  std::set<std::string, std::less<>> perceives;
  std::map<std::string, double, std::less<>> overrides;

  bool operator==(const UserProfile&) const = default;
};

/// Throws UnknownTrait for unresolvable trait names and InvalidAccuracy for
/// overrides outside [0,1].
void validate_profile(const UserProfile& profile, const Register& reg);

/// Weights of the path objective. Edge weight is
///   w_acc * (-ln accuracy) + w_lat * latency + w_cost * cost,
/// with accuracy-0 edges excluded from the search.
struct Objective {
  double w_acc = 1.0;
  double w_lat = 0.0;
  double w_cost = 0.0;

  bool operator==(const Objective&) const = default;
};

/// Throws InvalidObjective on negative or all-zero weights.
void validate_objective(const Objective& objective);

/// An ordered transformation chain with composed metrics. An empty stage list
/// means direct perception: accuracy 1, latency 0, cost 0.
struct ChannelPlan {
  std::string source;
  std::string sink;
  std::vector<std::string> stages;
  double end_to_end_accuracy = 1.0;
  double total_latency_ms = 0.0;
  double total_cost = 0.0;
  double weight = 0.0;  // objective value of the chain

  bool operator==(const ChannelPlan&) const = default;
};

/// Minimum-weight chain from any sender-producible trait to any
/// receiver-perceivable trait. Ties go to fewer stages, then to the
/// lexicographically smallest stage-id sequence, then to the smallest
/// endpoint name. Sender overrides apply to stage accuracies.
/// Throws InvalidObjective (all-zero or negative weights), UnknownTrait,
/// NoChannel.
ChannelPlan plan_channel(const UserProfile& sender, const UserProfile& receiver,
                         const Catalog& catalog, const Objective& objective);

/// plan_channel with the roles swapped: the named receiver talks back.
ChannelPlan reverse_channel(const UserProfile& sender, const UserProfile& receiver,
                            const Catalog& catalog, const Objective& objective);

/// Product over stages of the effective (override-aware) accuracy.
/// Throws UnknownStage for unresolvable stage ids.
double channel_accuracy(const ChannelPlan& plan, const UserProfile& sender,
                        const Catalog& catalog);

/// Result of pushing one message through a plan.
struct MessageOutcome {
  bool delivered = true;
  int failed_stage = -1;  // index of the first corrupted stage, -1 if delivered

  bool operator==(const MessageOutcome&) const = default;
};

/// Draws one independent Bernoulli per stage with the stage's effective
/// accuracy; stops at the first failure.
MessageOutcome simulate_message(const ChannelPlan& plan, const UserProfile& sender,
                                const Catalog& catalog, RngStream& rng);

namespace detail {

/// Shared planner core. `require_pivot` restricts multi-stage chains to those
/// touching at least one category-I descriptor (the hub constraint); direct
/// perception stays exempt. Returns false when no chain exists.
bool plan_between(const std::set<std::string, std::less<>>& sources,
                  const std::set<std::string, std::less<>>& sinks,
                  const std::map<std::string, double, std::less<>>& overrides,
                  const Catalog& catalog, const Objective& objective,
                  bool require_pivot, ChannelPlan& out);

double effective_accuracy(const Transformation& t,
                          const std::map<std::string, double, std::less<>>& overrides);

}  // namespace detail

}  // namespace aacplan
