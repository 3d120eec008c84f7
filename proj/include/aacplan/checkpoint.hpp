#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "aacplan/channel.hpp"

namespace aacplan {

/// The six communication points of the semi-automated border-control
/// pipeline, in traversal order.
enum class PointName {
  IntelligentProfiling,
  AuthenticationValidation,
  CarryInLuggage,
  CarryOutLuggage,
  BodyScreening,
  Interviewing,
};

std::string_view to_string(PointName name);
std::optional<PointName> point_name_from_string(std::string_view name);

/// One security point: a communication plan plus its retry policy. Attempt
/// r (0-based) succeeds with probability min(1, accuracy + r * retry_boost).
struct SecurityPoint {
  int index = 1;  // 1..6
  PointName name = PointName::IntelligentProfiling;
  ChannelPlan plan;
  int max_retries = 0;
  double retry_boost = 0.0;
};

/// Throws InvalidDescriptor unless the pipeline is exactly the six points
/// with indices 1..6 in order.
void validate_pipeline(std::span<const SecurityPoint> pipeline);

/// Outcome of one traveller passing through the pipeline.
struct TravellerRun {
  std::vector<int> attempts;          // per point, zero after a halt
  bool cleared = false;
  int alarm_point = 0;                // point index that raised the alarm, 0 if cleared
  double total_service_time_ms = 0.0; // sum over points of attempts * plan latency
};

/// Runs one point: retries until success or the budget is exhausted.
/// Returns (attempts consumed, success flag).
std::pair<int, bool> run_point(const SecurityPoint& point, const UserProfile& sender,
                               const Catalog& catalog, RngStream& rng);

/// Runs the points in order; the first exhausted point raises Alarm(index)
/// and later points are never attempted.
TravellerRun run_traveller(std::span<const SecurityPoint> pipeline,
                           const UserProfile& sender, const Catalog& catalog,
                           RngStream& rng);

/// Closed-form clear probability:
///   prod over points of (1 - prod_{r=0..R} (1 - min(1, a + r*boost))).
double analytic_clear_prob(std::span<const SecurityPoint> pipeline,
                           const UserProfile& sender, const Catalog& catalog);

/// Terminal failure probability of one point - the window a misrecognition
/// (or a deliberate semantic attack) has to survive every retry.
double semantic_attack_margin(const SecurityPoint& point, const UserProfile& sender,
                              const Catalog& catalog);

/// Aggregate of `n` independent traveller runs.
struct SimulationReport {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t cleared = 0;
  std::vector<std::uint64_t> alarm_by_point;    // per pipeline position
  std::vector<std::uint64_t> attempts_by_point; // per pipeline position
  double clear_rate = 0.0;
  double alarm_rate = 0.0;
  double mean_attempts = 0.0;
  double mean_service_time_ms = 0.0;

  bool operator==(const SimulationReport&) const = default;
};

/// Monte-Carlo estimate over n travellers. Trial t draws from the stream
/// derived from (master_seed, t), and all aggregation is order-independent,
/// so the report is identical for any trial schedule or thread count.
SimulationReport monte_carlo(std::span<const SecurityPoint> pipeline,
                             const UserProfile& sender, const Catalog& catalog,
                             std::uint64_t n, std::uint64_t master_seed);

/// Single-threaded reference used by tests and the benchmark.
SimulationReport monte_carlo_serial(std::span<const SecurityPoint> pipeline,
                                    const UserProfile& sender, const Catalog& catalog,
                                    std::uint64_t n, std::uint64_t master_seed);

}  // namespace aacplan
