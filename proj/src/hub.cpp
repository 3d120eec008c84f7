#include "aacplan/hub.hpp"

#include <cstddef>

#include "aacplan/errors.hpp"

namespace aacplan {

namespace {

const UserProfile& member_of(const Team& team, const std::string& id) {
  for (const UserProfile& member : team.members) {
    if (member.id == id) return member;
  }
  throw UnknownMember("no team member \"" + id + "\"");
}

// NoChannel folded into an empty optional; used by the matrix fill so the
// parallel loop stays exception-free.
std::optional<ReachEntry> try_route(const UserProfile& from, const UserProfile& to,
                                    const Catalog& catalog, const Objective& objective) {
  ChannelPlan plan;
  if (!detail::plan_between(from.produces, to.perceives, from.overrides, catalog,
                            objective, /*require_pivot=*/true, plan)) {
    return std::nullopt;
  }
  return ReachEntry{plan.end_to_end_accuracy, static_cast<int>(plan.stages.size())};
}

}  // namespace

void validate_team(const Team& team, const Register& reg) {
  if (team.members.empty()) throw InvalidDescriptor("team must be non-empty");
  for (std::size_t i = 0; i < team.members.size(); ++i) {
    validate_profile(team.members[i], reg);
    for (std::size_t j = i + 1; j < team.members.size(); ++j) {
      if (team.members[i].id == team.members[j].id) {
        throw DuplicateName("duplicate team member id \"" + team.members[i].id + "\"");
      }
    }
  }
}

ChannelPlan route(const Team& team, const std::string& from, const std::string& to,
                  const Catalog& catalog, const Objective& objective) {
  validate_objective(objective);
  if (from == to) throw SelfRoute("route from \"" + from + "\" to itself");
  const UserProfile& sender = member_of(team, from);
  const UserProfile& receiver = member_of(team, to);
  validate_profile(sender, catalog.traits());
  validate_profile(receiver, catalog.traits());

  ChannelPlan plan;
  if (!detail::plan_between(sender.produces, receiver.perceives, sender.overrides,
                            catalog, objective, /*require_pivot=*/true, plan)) {
    throw NoChannel("no hub route from \"" + from + "\" to \"" + to + "\"");
  }
  return plan;
}

namespace {

ReachabilityMatrix fill_matrix(const Team& team, const Catalog& catalog,
                               const Objective& objective, bool parallel) {
  validate_objective(objective);
  validate_team(team, catalog.traits());

  std::vector<std::string> ids;
  ids.reserve(team.members.size());
  for (const UserProfile& member : team.members) ids.push_back(member.id);

  ReachabilityMatrix matrix(std::move(ids));
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(team.members.size());

  // Each (i,j) cell is written by exactly one iteration.
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      if (i == j) continue;
      matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          try_route(team.members[i], team.members[j], catalog, objective);
    }
  }
  return matrix;
}

}  // namespace

ReachabilityMatrix reachability_matrix(const Team& team, const Catalog& catalog,
                                       const Objective& objective) {
  return fill_matrix(team, catalog, objective, /*parallel=*/true);
}

ReachabilityMatrix reachability_matrix_serial(const Team& team, const Catalog& catalog,
                                              const Objective& objective) {
  return fill_matrix(team, catalog, objective, /*parallel=*/false);
}

}  // namespace aacplan
