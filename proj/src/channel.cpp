#include "aacplan/channel.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "aacplan/errors.hpp"

namespace aacplan {

void validate_profile(const UserProfile& profile, const Register& reg) {
  for (const auto& name : profile.produces) reg.descriptor(name);
  for (const auto& name : profile.perceives) reg.descriptor(name);
  for (const auto& [id, value] : profile.overrides) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InvalidAccuracy("override for \"" + id + "\" in profile \"" +
                            profile.id + "\" outside [0,1]");
    }
  }
}

namespace detail {

double effective_accuracy(const Transformation& t,
                          const std::map<std::string, double, std::less<>>& overrides) {
  auto it = overrides.find(t.id);
  return it != overrides.end() ? it->second : t.accuracy;
}

namespace {

struct Label {
  double weight = 0.0;
  std::vector<std::string> stages;
};

// Total order: weight, then stage count, then lexicographic id sequence.
bool label_less(const Label& a, const Label& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.stages.size() != b.stages.size()) return a.stages.size() < b.stages.size();
  return a.stages < b.stages;
}

struct QueueItem {
  Label label;
  std::string node;
  int pivot_seen = 0;
};

struct QueueGreater {
  bool operator()(const QueueItem& a, const QueueItem& b) const {
    if (label_less(a.label, b.label)) return false;
    if (label_less(b.label, a.label)) return true;
    if (a.node != b.node) return a.node > b.node;
    return a.pivot_seen > b.pivot_seen;
  }
};

}  // namespace

bool plan_between(const std::set<std::string, std::less<>>& sources,
                  const std::set<std::string, std::less<>>& sinks,
                  const std::map<std::string, double, std::less<>>& overrides,
                  const Catalog& catalog, const Objective& objective,
                  bool require_pivot, ChannelPlan& out) {
  const Register& reg = catalog.traits();

  // Direct perception: a trait the sender produces and the receiver
  // perceives carries the message with no stages at all. Exempt from the
  // pivot constraint.
  const ChannelPlan* direct = nullptr;
  ChannelPlan direct_plan;
  for (const auto& name : sources) {
    if (sinks.contains(name)) {
      direct_plan.source = name;
      direct_plan.sink = name;
      direct = &direct_plan;
      break;  // sources iterate sorted, first hit is the smallest common name
    }
  }

  // Adjacency over usable edges; map order keeps edge visits deterministic.
  std::map<std::string, std::vector<const Transformation*>, std::less<>> adjacency;
  for (const auto& [id, t] : catalog.transformations()) {
    if (effective_accuracy(t, overrides) > 0.0) adjacency[t.source].push_back(&t);
  }

  auto is_pivot = [&](const std::string& name) {
    return reg.descriptor(name).category == Category::I;
  };
  auto edge_weight = [&](const Transformation& t) {
    const double acc = effective_accuracy(t, overrides);
    return objective.w_acc * (-std::log(acc)) + objective.w_lat * t.latency_ms +
           objective.w_cost * t.cost;
  };

  // Dijkstra over (node, pivot flag) with whole-path labels. Extending a path
  // never improves its label, so settled labels are final.
  std::map<std::pair<std::string, int>, Label> best;
  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueGreater> queue;
  for (const auto& name : sources) {
    if (!reg.contains(name)) continue;
    const int layer = (!require_pivot || is_pivot(name)) ? 1 : 0;
    Label start;
    auto [it, inserted] = best.try_emplace({name, layer}, start);
    if (inserted) queue.push({start, name, layer});
  }

  while (!queue.empty()) {
    QueueItem item = queue.top();
    queue.pop();
    auto settled = best.find({item.node, item.pivot_seen});
    if (settled == best.end() || label_less(settled->second, item.label)) continue;

    auto adj = adjacency.find(item.node);
    if (adj == adjacency.end()) continue;
    for (const Transformation* t : adj->second) {
      const int layer = (item.pivot_seen == 1 || is_pivot(t->target)) ? 1 : 0;
      Label cand;
      cand.weight = item.label.weight + edge_weight(*t);
      cand.stages = item.label.stages;
      cand.stages.push_back(t->id);
      auto [it, inserted] = best.try_emplace({t->target, layer}, cand);
      if (!inserted) {
        if (!label_less(cand, it->second)) continue;
        it->second = cand;
      }
      queue.push({std::move(cand), t->target, layer});
    }
  }

  // Pick the best admissible sink label; pivot-constrained chains must have
  // the flag set. Ties across sinks go to the smaller sink name.
  const Label* best_label = nullptr;
  const std::string* best_sink = nullptr;
  for (const auto& name : sinks) {
    auto it = best.find({name, 1});
    if (it == best.end()) continue;
    if (!best_label || label_less(it->second, *best_label)) {
      best_label = &it->second;
      best_sink = &name;
    }
  }

  const bool path_found = best_label != nullptr;
  if (!path_found && !direct) return false;

  // Direct perception has weight 0 and zero stages, so it wins every tie.
  bool use_direct = direct != nullptr;
  if (direct && path_found) {
    Label empty;
    use_direct = !label_less(*best_label, empty);
  }

  if (use_direct) {
    out = *direct;
    return true;
  }

  out = ChannelPlan{};
  out.sink = *best_sink;
  out.stages = best_label->stages;
  out.weight = best_label->weight;
  for (const auto& id : out.stages) {
    const Transformation& t = catalog.transformation(id);
    out.end_to_end_accuracy *= effective_accuracy(t, overrides);
    out.total_latency_ms += t.latency_ms;
    out.total_cost += t.cost;
  }
  out.source = catalog.transformation(out.stages.front()).source;
  return true;
}

}  // namespace detail

void validate_objective(const Objective& objective) {
  if (objective.w_acc < 0.0 || objective.w_lat < 0.0 || objective.w_cost < 0.0) {
    throw InvalidObjective("objective weights must be non-negative");
  }
  if (objective.w_acc == 0.0 && objective.w_lat == 0.0 && objective.w_cost == 0.0) {
    throw InvalidObjective("objective weights must not all be zero");
  }
}

ChannelPlan plan_channel(const UserProfile& sender, const UserProfile& receiver,
                         const Catalog& catalog, const Objective& objective) {
  validate_objective(objective);
  validate_profile(sender, catalog.traits());
  validate_profile(receiver, catalog.traits());

  ChannelPlan plan;
  if (!detail::plan_between(sender.produces, receiver.perceives, sender.overrides,
                            catalog, objective, /*require_pivot=*/false, plan)) {
    throw NoChannel("no channel from \"" + sender.id + "\" to \"" + receiver.id + "\"");
  }
  return plan;
}

ChannelPlan reverse_channel(const UserProfile& sender, const UserProfile& receiver,
                            const Catalog& catalog, const Objective& objective) {
  return plan_channel(receiver, sender, catalog, objective);
}

double channel_accuracy(const ChannelPlan& plan, const UserProfile& sender,
                        const Catalog& catalog) {
  double accuracy = 1.0;
  for (const auto& id : plan.stages) {
    accuracy *= detail::effective_accuracy(catalog.transformation(id), sender.overrides);
  }
  return accuracy;
}

MessageOutcome simulate_message(const ChannelPlan& plan, const UserProfile& sender,
                                const Catalog& catalog, RngStream& rng) {
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    const Transformation& t = catalog.transformation(plan.stages[i]);
    if (!rng.bernoulli(detail::effective_accuracy(t, sender.overrides))) {
      return MessageOutcome{false, static_cast<int>(i)};
    }
  }
  return MessageOutcome{};
}

}  // namespace aacplan
