#include "aacplan/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/distributions/normal.hpp>

#include "aacplan/errors.hpp"

namespace aacplan {

std::string_view to_string(AdaptMode mode) {
  switch (mode) {
    case AdaptMode::Manual: return "manual";
    case AdaptMode::ContextRule: return "context_rule";
    case AdaptMode::Online: return "online";
  }
  return "?";
}

std::optional<AdaptMode> adapt_mode_from_string(std::string_view name) {
  for (AdaptMode m : {AdaptMode::Manual, AdaptMode::ContextRule, AdaptMode::Online}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

AdaptiveEstimate observe(AdaptiveEstimate e, bool success) {
  if (e.mode != AdaptMode::Online) return e;
  e.trials += 1;
  if (success) e.successes += 1;
  return e;
}

double estimate(const AdaptiveEstimate& e) {
  switch (e.mode) {
    case AdaptMode::Manual:
      return e.prior;
    case AdaptMode::ContextRule:
      return std::clamp(e.prior + e.context_bias, 0.0, 1.0);
    case AdaptMode::Online:
      return (static_cast<double>(e.successes) + e.prior * kPriorWeight) /
             (static_cast<double>(e.trials) + kPriorWeight);
  }
  return e.prior;
}

double half_width(const AdaptiveEstimate& e, double confidence) {
  if (e.trials == 0) {
    throw InsufficientData("half_width needs at least one trial");
  }
  const boost::math::normal_distribution<double> normal;
  const double z = boost::math::quantile(normal, 0.5 + confidence / 2.0);
  const double p = estimate(e);
  return z * std::sqrt(p * (1.0 - p) / static_cast<double>(e.trials));
}

std::pair<UserProfile, std::vector<AdaptiveEstimate>> perception_action_step(
    UserProfile profile, std::vector<AdaptiveEstimate> estimates,
    const std::vector<Observation>& batch) {
  std::set<std::string> touched;
  for (const Observation& obs : batch) {
    auto it = std::find_if(estimates.begin(), estimates.end(),
                           [&](const AdaptiveEstimate& e) {
                             return e.user == profile.id &&
                                    e.transformation == obs.transformation;
                           });
    if (it == estimates.end()) {
      throw UnknownEstimate("no estimate for user \"" + profile.id +
                            "\", transformation \"" + obs.transformation + "\"");
    }
    *it = observe(std::move(*it), obs.success);
    touched.insert(obs.transformation);
  }
  for (const AdaptiveEstimate& e : estimates) {
    if (e.user == profile.id && touched.contains(e.transformation)) {
      profile.overrides[e.transformation] = estimate(e);
    }
  }
  return {std::move(profile), std::move(estimates)};
}

}  // namespace aacplan
