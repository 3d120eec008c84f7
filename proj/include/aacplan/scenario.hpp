#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aacplan/adapt.hpp"
#include "aacplan/channel.hpp"
#include "aacplan/checkpoint.hpp"
#include "aacplan/elicit.hpp"
#include "aacplan/hub.hpp"
#include "aacplan/transform.hpp"

namespace aacplan {

/// Reference into the bundled recognizer comparison table.
struct TopkRef {
  std::string model;
  int k = 1;

  bool operator==(const TopkRef&) const = default;
};

/// Parsed, validated scenario document. Defaults are materialized at parse
/// time so a parse -> serialize -> parse round trip yields an equal value.
struct Scenario {
  struct TransformationSpec {
    std::string id;
    std::string source;
    std::string target;
    std::optional<double> accuracy;  // exactly one of accuracy / topk_ref
    std::optional<TopkRef> topk_ref;
    double latency_ms = 0.0;
    double cost = 0.0;

    bool operator==(const TransformationSpec&) const = default;
  };

  struct AdaptationSpec {
    std::string user;
    std::string transformation;
    AdaptMode mode = AdaptMode::Online;
    double prior = 0.5;
    std::optional<double> context_bias;  // ContextRule only
    double tau = 0.02;

    bool operator==(const AdaptationSpec&) const = default;
  };

  struct GridSpec {
    std::vector<JudgmentGrid::Row> rows;
    std::vector<JudgmentGrid::Col> cols;
    std::vector<JudgmentGrid::Cell> cells;

    bool operator==(const GridSpec&) const = default;
  };

  struct PointSpec {
    int index = 1;
    PointName name = PointName::IntelligentProfiling;
    std::optional<std::string> plan_sender;    // inline plan: sender/receiver pair
    std::optional<std::string> plan_receiver;
    std::optional<std::string> plan_ref;       // or the name of an earlier point
    int max_retries = 0;
    double retry_boost = 0.05;

    bool operator==(const PointSpec&) const = default;
  };

  struct CheckpointSpec {
    std::vector<PointSpec> points;
    std::uint64_t n = 100000;
    std::uint64_t seed = 0;

    bool operator==(const CheckpointSpec&) const = default;
  };

  std::vector<TraitDescriptor> register_extensions;
  std::vector<TransformationSpec> transformations;
  std::vector<UserProfile> profiles;
  Objective objective;  // defaults to w_acc 1, w_lat 0, w_cost 0
  std::vector<std::string> team;
  std::vector<AdaptationSpec> adaptation;
  std::optional<GridSpec> grid;
  std::optional<CheckpointSpec> checkpoint;

  bool operator==(const Scenario&) const = default;
};

/// Parses and fully validates a scenario file. Throws ParseError for
/// malformed JSON (with the line number) and ValidationError (with a
/// JSON-pointer-style path) for schema or cross-reference violations.
Scenario parse_scenario(const std::filesystem::path& path);

/// Same, from an in-memory document.
Scenario parse_scenario_text(const std::string& text);

/// Canonical JSON rendering with stable key order and defaults materialized.
std::string serialize_scenario(const Scenario& scenario);

/// Canonical register plus the scenario's extensions.
Register build_register(const Scenario& scenario);

/// All scenario transformations resolved against `reg`; topk_ref entries pull
/// their accuracy from the bundled table.
Catalog build_catalog(const Scenario& scenario, const Register& reg);

/// Throws UnknownMember when the id is not a scenario profile.
const UserProfile& profile_of(const Scenario& scenario, const std::string& id);

/// The scenario team (profile ids resolved to profiles).
Team build_team(const Scenario& scenario);

JudgmentGrid build_grid(const Scenario& scenario);

/// Fresh adaptation estimates for every scenario adaptation entry.
std::vector<AdaptiveEstimate> build_estimates(const Scenario& scenario);

/// Profiling pre-load: writes each adaptation entry's current estimate into
/// the owning profile's overrides. Returns the adapted copies.
std::vector<UserProfile> apply_adaptation(const Scenario& scenario);

/// Resolves every checkpoint point to a concrete SecurityPoint; inline plans
/// run the planner between the named profiles (adaptation pre-load applied),
/// plan_ref entries reuse an earlier point's plan.
std::vector<SecurityPoint> build_pipeline(const Scenario& scenario,
                                          const Catalog& catalog);

}  // namespace aacplan
