#pragma once

// Seeded random instances shared by the unit and acceptance suites. All
// draws come from explicit streams, so every case is reproducible from its
// seed alone.

#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "aacplan/channel.hpp"
#include "aacplan/checkpoint.hpp"
#include "aacplan/elicit.hpp"
#include "aacplan/errors.hpp"
#include "aacplan/rng.hpp"
#include "aacplan/transform.hpp"

namespace gen {

inline std::uint64_t pick(aacplan::RngStream& rng, std::uint64_t bound) {
  return rng.next_u64() % bound;
}

struct CatalogCase {
  aacplan::Catalog catalog{aacplan::canonical_register()};
  aacplan::UserProfile sender;
  aacplan::UserProfile receiver;
  aacplan::Objective objective;
};

// Random catalog over a subset of the canonical register: at most 10
// descriptors and 25 edges, quantized metrics so weight ties actually occur.
inline CatalogCase random_catalog_case(std::uint64_t seed) {
  aacplan::RngStream rng = aacplan::RngStream::derive(seed, 0);
  CatalogCase out;

  std::vector<std::string> universe;
  for (const auto& [name, d] : out.catalog.traits().entries()) {
    (void)d;
    universe.push_back(name);
  }
  const std::size_t n_desc = 3 + pick(rng, 8);  // 3..10
  std::vector<std::string> chosen;
  for (std::size_t i = 0; i < n_desc; ++i) {
    std::string name = universe[pick(rng, universe.size())];
    bool dup = false;
    for (const auto& c : chosen) dup = dup || c == name;
    if (!dup) chosen.push_back(name);
  }

  static constexpr double kAccuracies[] = {0.0, 0.5, 0.7, 0.85, 0.9, 0.95, 1.0};
  static constexpr double kLatencies[] = {0, 20, 50, 100};
  static constexpr double kCosts[] = {0, 1, 2, 5};

  const std::size_t n_edges = pick(rng, 26);  // 0..25
  int added = 0;
  for (std::size_t e = 0; e < n_edges; ++e) {
    const std::string& src = chosen[pick(rng, chosen.size())];
    const std::string& dst = chosen[pick(rng, chosen.size())];
    char id[16];
    std::snprintf(id, sizeof id, "e%02d", added);
    try {
      out.catalog = out.catalog.added(
          id, src, dst, kAccuracies[pick(rng, std::size(kAccuracies))],
          kLatencies[pick(rng, std::size(kLatencies))],
          kCosts[pick(rng, std::size(kCosts))]);
      ++added;
    } catch (const aacplan::Error&) {
      // self loop or twin real trait; skip the draw
    }
  }

  auto subset = [&](std::set<std::string, std::less<>>& target,
                    const std::vector<std::string>& pool) {
    const std::size_t count = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < count; ++i) {
      target.insert(pool[pick(rng, pool.size())]);
    }
  };
  out.sender.id = "sender";
  out.receiver.id = "receiver";
  subset(out.sender.produces, chosen);

  // Mostly disjoint capability sets so real chains dominate; every fourth
  // case may overlap and exercise the direct-perception rule.
  std::vector<std::string> receivable;
  for (const auto& name : chosen) {
    if (!out.sender.produces.contains(name)) receivable.push_back(name);
  }
  if (seed % 4 == 0 || receivable.empty()) receivable = chosen;
  subset(out.receiver.perceives, receivable);

  // Occasional personalization overrides, including hard zeroes.
  for (const auto& [id, t] : out.catalog.transformations()) {
    (void)t;
    if (pick(rng, 10) == 0) {
      static constexpr double kOverrides[] = {0.0, 0.6, 0.95, 1.0};
      out.sender.overrides[id] = kOverrides[pick(rng, std::size(kOverrides))];
    }
  }

  static constexpr double kWeights[] = {0.0, 0.5, 1.0, 2.0};
  do {
    out.objective.w_acc = kWeights[pick(rng, std::size(kWeights))];
    out.objective.w_lat = kWeights[pick(rng, std::size(kWeights))];
    out.objective.w_cost = kWeights[pick(rng, std::size(kWeights))];
  } while (out.objective.w_acc == 0.0 && out.objective.w_lat == 0.0 &&
           out.objective.w_cost == 0.0);
  return out;
}

struct PipelineCase {
  aacplan::Catalog catalog{aacplan::canonical_register()};
  aacplan::UserProfile sender;
  std::vector<aacplan::SecurityPoint> pipeline;
};

// Six points with independent single-stage plans and random retry policies.
inline PipelineCase random_pipeline_case(std::uint64_t seed) {
  aacplan::RngStream rng = aacplan::RngStream::derive(seed, 2);
  PipelineCase out;
  out.sender = {"traveller", {"HandGesture"}, {"Text"}, {}};

  static constexpr aacplan::PointName kNames[] = {
      aacplan::PointName::IntelligentProfiling,
      aacplan::PointName::AuthenticationValidation,
      aacplan::PointName::CarryInLuggage,
      aacplan::PointName::CarryOutLuggage,
      aacplan::PointName::BodyScreening,
      aacplan::PointName::Interviewing,
  };
  static constexpr double kAccuracies[] = {0.6, 0.7, 0.85, 0.9, 0.95, 0.99};
  static constexpr double kBoosts[] = {0.0, 0.05, 0.1};

  for (int i = 0; i < 6; ++i) {
    const double accuracy = kAccuracies[pick(rng, std::size(kAccuracies))];
    const double latency = static_cast<double>(10 * (1 + pick(rng, 20)));
    const std::string id = "p" + std::to_string(i + 1);
    out.catalog = out.catalog.added(id, "HandGesture", "Text", accuracy, latency, 1.0);

    aacplan::SecurityPoint point;
    point.index = i + 1;
    point.name = kNames[i];
    point.plan.source = "HandGesture";
    point.plan.sink = "Text";
    point.plan.stages = {id};
    point.plan.end_to_end_accuracy = accuracy;
    point.plan.total_latency_ms = latency;
    point.plan.total_cost = 1.0;
    point.max_retries = static_cast<int>(pick(rng, 4));
    point.retry_boost = kBoosts[pick(rng, std::size(kBoosts))];
    out.pipeline.push_back(std::move(point));
  }
  return out;
}

struct GridCase {
  aacplan::JudgmentGrid grid;
  std::set<std::string> needs;
};

// Random 5x8 grid with every row coverable; needs = all five rows.
inline GridCase random_grid_case(std::uint64_t seed) {
  aacplan::RngStream rng = aacplan::RngStream::derive(seed, 1);

  std::vector<aacplan::JudgmentGrid::Row> rows;
  for (char r = 'A'; r <= 'E'; ++r) {
    rows.push_back({std::string(1, r), "disability " + std::string(1, r)});
  }
  static constexpr double kCosts[] = {1.0, 2.0};
  std::vector<aacplan::JudgmentGrid::Col> cols;
  for (int c = 1; c <= 8; ++c) {
    cols.push_back({std::to_string(c), "technology " + std::to_string(c),
                    kCosts[pick(rng, std::size(kCosts))]});
  }

  std::vector<aacplan::JudgmentGrid::Cell> cells;
  std::vector<bool> row_covered(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (pick(rng, 100) < 70) {
        const double score = 0.5 + 0.05 * static_cast<double>(pick(rng, 11));
        cells.push_back({rows[i].label, cols[j].label, score});
        row_covered[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_covered[i]) {
      cells.push_back({rows[i].label, cols[pick(rng, cols.size())].label, 0.75});
    }
  }

  GridCase out{aacplan::JudgmentGrid::make(rows, cols, cells), {}};
  for (const auto& row : rows) out.needs.insert(row.label);
  return out;
}

}  // namespace gen
