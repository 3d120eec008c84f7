#include <doctest.h>

#include <cmath>
#include <limits>

#include "aacplan/channel.hpp"
#include "aacplan/errors.hpp"
#include "support/generators.hpp"
#include "support/path_oracle.hpp"

using namespace aacplan;

namespace {

Catalog figure_catalog() {
  return Catalog(canonical_register())
      .added("g2t", "HandGesture", "Text", 0.86, 120, 2)
      .added("t2ss", "Text", "SyntheticSpeech", 1.0, 40, 1)
      .added("s2t", "AuditorySignal", "Text", 0.95, 80, 1)
      .added("t2sg", "Text", "SyntheticGesture", 1.0, 60, 2)
      .added("sg2av", "SyntheticGesture", "AvatarVisual", 1.0, 30, 1);
}

const UserProfile kTraveller{"traveller", {"HandGesture"}, {"AvatarVisual"}, {}};
const UserProfile kOfficer{"officer", {"AuditorySignal"}, {"SyntheticSpeech"}, {}};

}  // namespace

TEST_CASE("gesture-to-speech chain through text") {
  const Catalog catalog = figure_catalog();
  const ChannelPlan plan = plan_channel(kTraveller, kOfficer, catalog, {});
  CHECK(plan.stages == std::vector<std::string>{"g2t", "t2ss"});
  CHECK(plan.source == "HandGesture");
  CHECK(plan.sink == "SyntheticSpeech");
  CHECK(plan.end_to_end_accuracy == doctest::Approx(0.86).epsilon(1e-12));
}

TEST_CASE("speech-to-avatar reply chain") {
  const Catalog catalog = figure_catalog();
  const ChannelPlan plan = reverse_channel(kTraveller, kOfficer, catalog, {});
  CHECK(plan.stages == std::vector<std::string>{"s2t", "t2sg", "sg2av"});
  CHECK(plan.sink == "AvatarVisual");
}

TEST_CASE("direct perception yields the empty plan") {
  const Catalog catalog = figure_catalog();
  const UserProfile a{"a", {"AuditorySignal"}, {}, {}};
  const UserProfile b{"b", {}, {"AuditorySignal"}, {}};
  const ChannelPlan plan = plan_channel(a, b, catalog, {});
  CHECK(plan.stages.empty());
  CHECK(plan.end_to_end_accuracy == 1.0);
  CHECK(plan.total_latency_ms == 0.0);
  CHECK(plan.weight == 0.0);

  // reply direction of the identity case is the identity again
  const UserProfile a2{"a", {"AuditorySignal"}, {"AuditorySignal"}, {}};
  CHECK(reverse_channel(a2, a2, catalog, {}).stages.empty());
}

TEST_CASE("planner error cases") {
  const Catalog catalog = figure_catalog();
  const UserProfile mute{"mute", {"Breathing"}, {}, {}};
  CHECK_THROWS_AS((void)plan_channel(mute, kOfficer, catalog, {}), NoChannel);

  CHECK_THROWS_AS((void)plan_channel(kTraveller, kOfficer, catalog, {0, 0, 0}),
                  InvalidObjective);
  CHECK_THROWS_AS((void)plan_channel(kTraveller, kOfficer, catalog, {-1, 0, 1}),
                  InvalidObjective);

  const UserProfile ghost{"ghost", {"Ectoplasm"}, {}, {}};
  CHECK_THROWS_AS((void)plan_channel(ghost, kOfficer, catalog, {}), UnknownTrait);
}

TEST_CASE("zero-accuracy edges are unusable") {
  const Catalog catalog = Catalog(canonical_register())
                              .added("dead", "HandGesture", "Text", 0.0, 0, 0)
                              .added("t2ss", "Text", "SyntheticSpeech", 1.0, 0, 0);
  CHECK_THROWS_AS((void)plan_channel(kTraveller, kOfficer, catalog, {}), NoChannel);

  // an override can also zero an edge out
  const Catalog alive = Catalog(canonical_register())
                            .added("g2t", "HandGesture", "Text", 0.9, 0, 0)
                            .added("t2ss", "Text", "SyntheticSpeech", 1.0, 0, 0);
  UserProfile pessimist = kTraveller;
  pessimist.overrides["g2t"] = 0.0;
  CHECK_THROWS_AS((void)plan_channel(pessimist, kOfficer, alive, {}), NoChannel);
}

TEST_CASE("channel accuracy composes stage accuracies with overrides") {
  const Catalog catalog = Catalog(canonical_register())
                              .added("g2t", "HandGesture", "Text", 0.85, 0, 0)
                              .added("t2ss", "Text", "SyntheticSpeech", 0.95, 0, 0);
  const ChannelPlan plan = plan_channel(kTraveller, kOfficer, catalog, {});
  CHECK(channel_accuracy(plan, kTraveller, catalog) ==
        doctest::Approx(0.8075).epsilon(1e-12));

  CHECK(channel_accuracy(ChannelPlan{}, kTraveller, catalog) == 1.0);

  UserProfile tuned = kTraveller;
  tuned.overrides["g2t"] = 0.95;
  ChannelPlan single;
  single.stages = {"g2t"};
  CHECK(channel_accuracy(single, tuned, catalog) == 0.95);

  ChannelPlan bogus;
  bogus.stages = {"nope"};
  CHECK_THROWS_AS((void)channel_accuracy(bogus, kTraveller, catalog), UnknownStage);
}

TEST_CASE("message simulation edge cases") {
  const Catalog certain = Catalog(canonical_register())
                              .added("g2t", "HandGesture", "Text", 1.0, 0, 0);
  const Catalog hopeless = Catalog(canonical_register())
                               .added("g2t", "HandGesture", "Text", 0.0, 0, 0);
  ChannelPlan plan;
  plan.stages = {"g2t"};

  RngStream rng(1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(simulate_message(plan, kTraveller, certain, rng).delivered);
  }
  for (int i = 0; i < 1000; ++i) {
    const MessageOutcome out = simulate_message(plan, kTraveller, hopeless, rng);
    CHECK_FALSE(out.delivered);
    CHECK(out.failed_stage == 0);
  }
}

TEST_CASE("empirical delivery rate matches the closed form") {
  const Catalog catalog = Catalog(canonical_register())
                              .added("g2t", "HandGesture", "Text", 0.85, 0, 0);
  ChannelPlan plan;
  plan.stages = {"g2t"};

  const int n = 100000;
  int delivered = 0;
  for (int t = 0; t < n; ++t) {
    RngStream rng = RngStream::derive(11, static_cast<std::uint64_t>(t));
    if (simulate_message(plan, kTraveller, catalog, rng).delivered) ++delivered;
  }
  const double rate = static_cast<double>(delivered) / n;
  CHECK(std::abs(rate - 0.85) <= 0.005);
}

TEST_CASE("planner agrees with exhaustive path enumeration") {
  int channels = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const gen::CatalogCase c = gen::random_catalog_case(seed);
    const auto expected = oracle::best_simple_path(c.sender, c.receiver, c.catalog,
                                                   c.objective);
    ChannelPlan plan;
    bool planned = true;
    try {
      plan = plan_channel(c.sender, c.receiver, c.catalog, c.objective);
    } catch (const NoChannel&) {
      planned = false;
    }
    REQUIRE(planned == expected.has_value());
    if (!planned) continue;
    ++channels;
    CHECK(plan.weight == expected->weight);  // exact: same accumulation order
    CHECK(plan.stages == expected->stages);
    CHECK(plan.source == expected->source);
    CHECK(plan.sink == expected->sink);
  }
  CHECK(channels > 50);  // the generator must exercise real plans
}

TEST_CASE("reverse channel is the planner with roles swapped") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const gen::CatalogCase c = gen::random_catalog_case(seed);
    UserProfile left = c.sender;
    left.perceives = c.receiver.perceives;
    UserProfile right = c.receiver;
    right.produces = c.sender.produces;

    ChannelPlan forward, reversed;
    bool forward_ok = true, reversed_ok = true;
    try {
      forward = plan_channel(right, left, c.catalog, c.objective);
    } catch (const NoChannel&) {
      forward_ok = false;
    }
    try {
      reversed = reverse_channel(left, right, c.catalog, c.objective);
    } catch (const NoChannel&) {
      reversed_ok = false;
    }
    REQUIRE(forward_ok == reversed_ok);
    if (forward_ok) CHECK(forward == reversed);
  }
}

TEST_CASE("plan validity on random catalogs") {
  for (std::uint64_t seed = 200; seed < 300; ++seed) {
    const gen::CatalogCase c = gen::random_catalog_case(seed);
    ChannelPlan plan;
    try {
      plan = plan_channel(c.sender, c.receiver, c.catalog, c.objective);
    } catch (const NoChannel&) {
      continue;
    }
    if (plan.stages.empty()) {
      CHECK(c.sender.produces.contains(plan.source));
      CHECK(c.receiver.perceives.contains(plan.source));
      continue;
    }
    CHECK(c.sender.produces.contains(
        c.catalog.transformation(plan.stages.front()).source));
    CHECK(c.receiver.perceives.contains(
        c.catalog.transformation(plan.stages.back()).target));
    for (std::size_t i = 0; i + 1 < plan.stages.size(); ++i) {
      CHECK(c.catalog.transformation(plan.stages[i]).target ==
            c.catalog.transformation(plan.stages[i + 1]).source);
    }
    // composition identity: product rule in log space
    double log_sum = 0.0;
    for (const auto& id : plan.stages) {
      log_sum += -std::log(detail::effective_accuracy(
          c.catalog.transformation(id), c.sender.overrides));
    }
    CHECK(channel_accuracy(plan, c.sender, c.catalog) ==
          doctest::Approx(std::exp(-log_sum)).epsilon(1e-12));
  }
}

TEST_CASE("adding an edge never worsens the optimum") {
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    const gen::CatalogCase c = gen::random_catalog_case(seed);
    double before = std::numeric_limits<double>::infinity();
    try {
      before = plan_channel(c.sender, c.receiver, c.catalog, c.objective).weight;
    } catch (const NoChannel&) {
    }

    // splice in a fresh mid-quality edge between random known traits
    aacplan::RngStream rng = aacplan::RngStream::derive(seed, 99);
    std::vector<std::string> names;
    for (const auto& [name, d] : c.catalog.traits().entries()) {
      (void)d;
      names.push_back(name);
    }
    Catalog grown = c.catalog;
    for (int tries = 0; tries < 10; ++tries) {
      const auto& src = names[gen::pick(rng, names.size())];
      const auto& dst = names[gen::pick(rng, names.size())];
      try {
        grown = grown.added("extra", src, dst, 0.9, 10, 1);
        break;
      } catch (const Error&) {
      }
    }

    double after = std::numeric_limits<double>::infinity();
    try {
      after = plan_channel(c.sender, c.receiver, grown, c.objective).weight;
    } catch (const NoChannel&) {
    }
    CHECK(after <= before);
  }
}

TEST_CASE("message simulation converges to channel accuracy") {
  const gen::CatalogCase c = gen::random_catalog_case(17);
  ChannelPlan plan;
  try {
    plan = plan_channel(c.sender, c.receiver, c.catalog, c.objective);
  } catch (const NoChannel&) {
    return;
  }
  const double p = channel_accuracy(plan, c.sender, c.catalog);
  const int n = 100000;
  int delivered = 0;
  for (int t = 0; t < n; ++t) {
    RngStream rng = RngStream::derive(5, static_cast<std::uint64_t>(t));
    if (simulate_message(plan, c.sender, c.catalog, rng).delivered) ++delivered;
  }
  const double rate = static_cast<double>(delivered) / n;
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(rate - p) <= 3.0 * sigma + 1e-12);
}
