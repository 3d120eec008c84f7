// Compares the OpenMP kernels against their serial reference implementations:
// the checkpoint Monte-Carlo engine and the all-pairs reachability matrix.

#include <benchmark/benchmark.h>

#include "aacplan/checkpoint.hpp"
#include "aacplan/hub.hpp"
#include "aacplan/scenario.hpp"

namespace {

using namespace aacplan;

struct Fixture {
  Catalog catalog{canonical_register()};
  UserProfile traveller;
  UserProfile officer;
  std::vector<SecurityPoint> pipeline;
  Team team;
  Objective objective;

  Fixture() {
    catalog = catalog.added("g2t", "HandGesture", "Text", 0.85, 120, 2)
                  .added("s2t", "AuditorySignal", "Text", 0.95, 80, 1)
                  .added("lip2t", "LipMovement", "Text", 0.8, 100, 2)
                  .added("gaze2t", "EyeGaze", "Text", 0.9, 150, 3)
                  .added("t2ss", "Text", "SyntheticSpeech", 1.0, 40, 1)
                  .added("t2sg", "Text", "SyntheticGesture", 1.0, 60, 2)
                  .added("t2aa", "Text", "AvatarAudio", 1.0, 35, 1)
                  .added("sg2av", "SyntheticGesture", "AvatarVisual", 1.0, 30, 1);
    traveller = {"traveller", {"HandGesture"}, {"AvatarVisual"}, {}};
    officer = {"officer", {"AuditorySignal"}, {"Text"}, {}};
    const ChannelPlan plan = plan_channel(traveller, officer, catalog, objective);
    const std::array<PointName, 6> names = {
        PointName::IntelligentProfiling, PointName::AuthenticationValidation,
        PointName::CarryInLuggage,       PointName::CarryOutLuggage,
        PointName::BodyScreening,        PointName::Interviewing};
    for (int i = 0; i < 6; ++i) {
      pipeline.push_back({i + 1, names[static_cast<std::size_t>(i)], plan, 1, 0.05});
    }
    team.members = {
        {"m1", {"HandGesture"}, {"AvatarVisual"}, {}},
        {"m2", {"AuditorySignal"}, {"SyntheticSpeech", "AvatarAudio"}, {}},
        {"m3", {"LipMovement"}, {"AvatarVisual", "SyntheticGesture"}, {}},
        {"m4", {"EyeGaze"}, {"AvatarAudio"}, {}},
        {"m5", {"HandGesture", "AuditorySignal"}, {"SyntheticSpeech"}, {}},
        {"m6", {"AuditorySignal"}, {"AvatarVisual"}, {}},
    };
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const Fixture& f = fixture();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto report = monte_carlo_serial(f.pipeline, f.traveller, f.catalog, n, 42);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const Fixture& f = fixture();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto report = monte_carlo(f.pipeline, f.traveller, f.catalog, n, 42);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_MatrixSerial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    auto matrix = reachability_matrix_serial(f.team, f.catalog, f.objective);
    benchmark::DoNotOptimize(matrix);
  }
}

void BM_MatrixParallel(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    auto matrix = reachability_matrix(f.team, f.catalog, f.objective);
    benchmark::DoNotOptimize(matrix);
  }
}

BENCHMARK(BM_MonteCarloSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatrixParallel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
