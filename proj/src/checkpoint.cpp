#include "aacplan/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>

#include "aacplan/errors.hpp"

namespace aacplan {

namespace {

constexpr std::array<PointName, 6> kPointOrder = {
    PointName::IntelligentProfiling, PointName::AuthenticationValidation,
    PointName::CarryInLuggage,       PointName::CarryOutLuggage,
    PointName::BodyScreening,        PointName::Interviewing,
};

double attempt_accuracy(double base, int retry, double boost) {
  return std::min(1.0, base + static_cast<double>(retry) * boost);
}

}  // namespace

std::string_view to_string(PointName name) {
  switch (name) {
    case PointName::IntelligentProfiling: return "IntelligentProfiling";
    case PointName::AuthenticationValidation: return "AuthenticationValidation";
    case PointName::CarryInLuggage: return "CarryInLuggage";
    case PointName::CarryOutLuggage: return "CarryOutLuggage";
    case PointName::BodyScreening: return "BodyScreening";
    case PointName::Interviewing: return "Interviewing";
  }
  return "?";
}

std::optional<PointName> point_name_from_string(std::string_view name) {
  for (PointName p : kPointOrder) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void validate_pipeline(std::span<const SecurityPoint> pipeline) {
  if (pipeline.size() != 6) {
    throw InvalidDescriptor("pipeline must have exactly 6 points, got " +
                            std::to_string(pipeline.size()));
  }
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    if (pipeline[i].index != static_cast<int>(i) + 1) {
      throw InvalidDescriptor("point at position " + std::to_string(i) +
                              " has index " + std::to_string(pipeline[i].index));
    }
    if (pipeline[i].max_retries < 0 || pipeline[i].retry_boost < 0.0 ||
        pipeline[i].retry_boost > 1.0) {
      throw InvalidDescriptor("retry policy of point " + std::to_string(i + 1) +
                              " out of range");
    }
  }
}

std::pair<int, bool> run_point(const SecurityPoint& point, const UserProfile& sender,
                               const Catalog& catalog, RngStream& rng) {
  const double base = channel_accuracy(point.plan, sender, catalog);
  for (int r = 0; r <= point.max_retries; ++r) {
    if (rng.bernoulli(attempt_accuracy(base, r, point.retry_boost))) {
      return {r + 1, true};
    }
  }
  return {point.max_retries + 1, false};
}

TravellerRun run_traveller(std::span<const SecurityPoint> pipeline,
                           const UserProfile& sender, const Catalog& catalog,
                           RngStream& rng) {
  TravellerRun run;
  run.attempts.assign(pipeline.size(), 0);
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    auto [attempts, success] = run_point(pipeline[i], sender, catalog, rng);
    run.attempts[i] = attempts;
    run.total_service_time_ms +=
        static_cast<double>(attempts) * pipeline[i].plan.total_latency_ms;
    if (!success) {
      run.cleared = false;
      run.alarm_point = pipeline[i].index;
      return run;
    }
  }
  run.cleared = true;
  run.alarm_point = 0;
  return run;
}

double semantic_attack_margin(const SecurityPoint& point, const UserProfile& sender,
                              const Catalog& catalog) {
  const double base = channel_accuracy(point.plan, sender, catalog);
  double fail_all = 1.0;
  for (int r = 0; r <= point.max_retries; ++r) {
    fail_all *= 1.0 - attempt_accuracy(base, r, point.retry_boost);
  }
  return fail_all;
}

double analytic_clear_prob(std::span<const SecurityPoint> pipeline,
                           const UserProfile& sender, const Catalog& catalog) {
  double clear = 1.0;
  for (const SecurityPoint& point : pipeline) {
    clear *= 1.0 - semantic_attack_margin(point, sender, catalog);
  }
  return clear;
}

namespace {

SimulationReport aggregate(std::span<const SecurityPoint> pipeline, std::uint64_t n,
                           std::uint64_t master_seed, std::uint64_t cleared,
                           std::vector<std::uint64_t> alarm_by_point,
                           std::vector<std::uint64_t> attempts_by_point) {
  SimulationReport report;
  report.n = n;
  report.seed = master_seed;
  report.cleared = cleared;
  report.alarm_by_point = std::move(alarm_by_point);
  report.attempts_by_point = std::move(attempts_by_point);
  report.clear_rate = static_cast<double>(cleared) / static_cast<double>(n);
  report.alarm_rate = 1.0 - report.clear_rate;

  std::uint64_t total_attempts = 0;
  double total_service = 0.0;
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    total_attempts += report.attempts_by_point[i];
    total_service += static_cast<double>(report.attempts_by_point[i]) *
                     pipeline[i].plan.total_latency_ms;
  }
  report.mean_attempts = static_cast<double>(total_attempts) / static_cast<double>(n);
  report.mean_service_time_ms = total_service / static_cast<double>(n);
  return report;
}

SimulationReport run_trials(std::span<const SecurityPoint> pipeline,
                            const UserProfile& sender, const Catalog& catalog,
                            std::uint64_t n, std::uint64_t master_seed,
                            bool parallel) {
  if (n == 0) throw InvalidDescriptor("simulation needs n >= 1");
  const std::size_t npoints = pipeline.size();

  // Resolve the per-point accuracies once; trials then only consume the
  // counter-derived streams, which keeps every trial independent of how the
  // loop is scheduled.
  std::vector<double> base_acc(npoints);
  for (std::size_t i = 0; i < npoints; ++i) {
    base_acc[i] = channel_accuracy(pipeline[i].plan, sender, catalog);
  }

  std::uint64_t cleared = 0;
  std::vector<std::uint64_t> alarms(npoints, 0);
  std::vector<std::uint64_t> attempts(npoints, 0);

#pragma omp parallel if (parallel)
  {
    std::uint64_t local_cleared = 0;
    std::vector<std::uint64_t> local_alarms(npoints, 0);
    std::vector<std::uint64_t> local_attempts(npoints, 0);

#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(n); ++t) {
      RngStream rng = RngStream::derive(master_seed, static_cast<std::uint64_t>(t));
      bool alarmed = false;
      for (std::size_t i = 0; i < npoints && !alarmed; ++i) {
        const SecurityPoint& point = pipeline[i];
        bool success = false;
        int used = point.max_retries + 1;
        for (int r = 0; r <= point.max_retries; ++r) {
          if (rng.bernoulli(attempt_accuracy(base_acc[i], r, point.retry_boost))) {
            success = true;
            used = r + 1;
            break;
          }
        }
        local_attempts[i] += static_cast<std::uint64_t>(used);
        if (!success) {
          local_alarms[i] += 1;
          alarmed = true;
        }
      }
      if (!alarmed) local_cleared += 1;
    }

#pragma omp critical
    {
      cleared += local_cleared;
      for (std::size_t i = 0; i < npoints; ++i) {
        alarms[i] += local_alarms[i];
        attempts[i] += local_attempts[i];
      }
    }
  }

  return aggregate(pipeline, n, master_seed, cleared, std::move(alarms),
                   std::move(attempts));
}

}  // namespace

SimulationReport monte_carlo(std::span<const SecurityPoint> pipeline,
                             const UserProfile& sender, const Catalog& catalog,
                             std::uint64_t n, std::uint64_t master_seed) {
  return run_trials(pipeline, sender, catalog, n, master_seed, /*parallel=*/true);
}

SimulationReport monte_carlo_serial(std::span<const SecurityPoint> pipeline,
                                    const UserProfile& sender, const Catalog& catalog,
                                    std::uint64_t n, std::uint64_t master_seed) {
  return run_trials(pipeline, sender, catalog, n, master_seed, /*parallel=*/false);
}

}  // namespace aacplan
