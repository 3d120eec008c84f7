#pragma once

#include <string>

#include <json.hpp>

#include "aacplan/channel.hpp"
#include "aacplan/checkpoint.hpp"
#include "aacplan/elicit.hpp"
#include "aacplan/hub.hpp"
#include "aacplan/transform.hpp"

namespace aacplan {

/// Shortest round-trip decimal rendering; identical bytes for identical values.
std::string fmt_double(double value);

nlohmann::ordered_json plan_to_json(const ChannelPlan& plan, const Catalog& catalog);
std::string plan_to_csv(const ChannelPlan& plan, const Catalog& catalog);

nlohmann::ordered_json matrix_to_json(const ReachabilityMatrix& matrix);
/// Rows/cols are member ids; cells hold the route accuracy or stay blank.
std::string matrix_to_csv(const ReachabilityMatrix& matrix);

nlohmann::ordered_json cluster_to_json(const JudgmentGrid& grid, const Cluster& cluster);
std::string cluster_to_csv(const JudgmentGrid& grid, const Cluster& cluster);

nlohmann::ordered_json simulation_to_json(const SimulationReport& report,
                                          std::span<const SecurityPoint> pipeline);
std::string simulation_points_csv(const SimulationReport& report,
                                  std::span<const SecurityPoint> pipeline,
                                  const UserProfile& sender, const Catalog& catalog);

nlohmann::ordered_json topk_to_json();
std::string topk_to_csv();

}  // namespace aacplan
