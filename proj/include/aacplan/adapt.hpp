#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aacplan/channel.hpp"

namespace aacplan {

/// The three personalization levels: fixed user setting, rule-based context
/// shift, and online estimation from observed outcomes.
enum class AdaptMode { Manual, ContextRule, Online };

std::string_view to_string(AdaptMode mode);
std::optional<AdaptMode> adapt_mode_from_string(std::string_view name);

/// Pseudo-count weight of the prior in the online estimator.
inline constexpr double kPriorWeight = 2.0;

/// Per-(user, transformation) accuracy belief.
struct AdaptiveEstimate {
  std::string user;
  std::string transformation;
  AdaptMode mode = AdaptMode::Online;
  double prior = 0.5;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double context_bias = 0.0;  // ContextRule only

  bool operator==(const AdaptiveEstimate&) const = default;
};

/// Folds one outcome into the estimate. Only Online mode counts observations;
/// the other modes return the estimate unchanged.
AdaptiveEstimate observe(AdaptiveEstimate e, bool success);

/// Current accuracy belief, always in [0,1]:
///   Manual      -> prior
///   ContextRule -> clamp(prior + context_bias, 0, 1)
///   Online      -> (successes + prior * w0) / (trials + w0), w0 = 2
double estimate(const AdaptiveEstimate& e);

/// Normal-approximation confidence half-width z * sqrt(p(1-p)/trials) of an
/// Online estimate. Throws InsufficientData at zero trials.
double half_width(const AdaptiveEstimate& e, double confidence);

struct Observation {
  std::string transformation;
  bool success = true;
};

/// One perception-action cycle: the perceptor folds the batch through
/// observe(), the actuator writes the touched estimates back into the
/// profile's overrides. Throws UnknownEstimate when a batch id has no
/// estimate for this user.
std::pair<UserProfile, std::vector<AdaptiveEstimate>> perception_action_step(
    UserProfile profile, std::vector<AdaptiveEstimate> estimates,
    const std::vector<Observation>& batch);

}  // namespace aacplan
