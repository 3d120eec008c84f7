#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aacplan/channel.hpp"

namespace aacplan {

/// An ordered group of personalized profiles with unique ids.
struct Team {
  std::vector<UserProfile> members;
};

/// Throws InvalidDescriptor on an empty team or duplicate member ids; member
/// profiles are validated against the register.
void validate_team(const Team& team, const Register& reg);

/// Optimal hub plan from member `from` to member `to`: plan_channel with the
/// extra constraint that every multi-stage chain pivots through at least one
/// category-I descriptor. Direct perception is exempt.
/// Throws UnknownMember, SelfRoute, NoChannel.
ChannelPlan route(const Team& team, const std::string& from, const std::string& to,
                  const Catalog& catalog, const Objective& objective);

struct ReachEntry {
  double accuracy = 1.0;
  int stage_count = 0;

  bool operator==(const ReachEntry&) const = default;
};

/// Square matrix of optimal pairwise hub routes; absent entries mean
/// unreachable pairs, the diagonal is undefined.
class ReachabilityMatrix {
 public:
  ReachabilityMatrix() = default;
  explicit ReachabilityMatrix(std::vector<std::string> ids)
      : ids_(std::move(ids)), cells_(ids_.size() * ids_.size()) {}

  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

  const std::optional<ReachEntry>& at(std::size_t row, std::size_t col) const {
    return cells_[row * ids_.size() + col];
  }
  std::optional<ReachEntry>& at(std::size_t row, std::size_t col) {
    return cells_[row * ids_.size() + col];
  }

  bool operator==(const ReachabilityMatrix&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::optional<ReachEntry>> cells_;
};

/// All-pairs route summary. Pairs are independent, so the computation runs
/// them in parallel; the result is identical to the serial variant.
ReachabilityMatrix reachability_matrix(const Team& team, const Catalog& catalog,
                                       const Objective& objective);

/// Single-threaded reference used by tests and the benchmark.
ReachabilityMatrix reachability_matrix_serial(const Team& team, const Catalog& catalog,
                                              const Objective& objective);

}  // namespace aacplan
