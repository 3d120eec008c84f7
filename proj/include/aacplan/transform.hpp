#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "aacplan/register.hpp"

namespace aacplan {

/// Transformation mode: I = within the synthetic domain, II = between the
/// real and synthetic domains, III = within the real domain.
enum class Mode { I, II, III };

std::string_view to_string(Mode mode);

Mode classify_mode(const TraitDescriptor& source, const TraitDescriptor& target);

/// A directed, mode-classified edge between two register entries.
struct Transformation {
  std::string id;
  std::string source;
  std::string target;
  Mode mode = Mode::I;  // derived from the endpoints, never user-supplied
  double accuracy = 1.0;
  double latency_ms = 0.0;
  double cost = 0.0;
};

/// Probability that one application of `t` corrupts the message.
double miscommunication(const Transformation& t);

/// Immutable id-keyed transformation collection bound to a register.
/// Parallel edges between the same endpoints are kept under distinct ids so
/// alternative implementations can be compared.
class Catalog {
 public:
  explicit Catalog(Register reg) : register_(std::move(reg)) {}

  /// Returns a copy additionally containing the edge, mode auto-derived.
  /// Throws UnknownTrait, InvalidAccuracy, InvalidTransformation (self loop
  /// or B-to-B edge between descriptors of equal kind and modality), or
  /// DuplicateName for a reused id.
  Catalog added(std::string id, std::string_view source, std::string_view target,
                double accuracy, double latency_ms, double cost) const;

  bool contains(std::string_view id) const;

  /// Throws UnknownStage when the id is absent.
  const Transformation& transformation(std::string_view id) const;

  const std::map<std::string, Transformation, std::less<>>& transformations() const {
    return transformations_;
  }
  const Register& traits() const { return register_; }
  std::size_t size() const { return transformations_.size(); }

 private:
  Register register_;
  std::map<std::string, Transformation, std::less<>> transformations_;
};

/// One row of the bundled sign-language recognizer comparison table.
struct TopkRow {
  std::string model;
  std::string dataset;
  double top1 = 0.0;
  double top5 = 0.0;
  double top10 = 0.0;

  /// Validating factory; rejects rows outside [0,100] or with
  /// top1 <= top5 <= top10 violated.
  static TopkRow make(std::string model, std::string dataset, double top1,
                      double top5, double top10);

  bool operator==(const TopkRow&) const = default;
};

/// The bundled WLASL-2000 model comparison, seven rows.
const std::vector<TopkRow>& builtin_topk_table();

/// Looks a row up by exact model name; returns nullptr when absent.
const TopkRow* find_topk_row(std::string_view model);

/// Maps a Top-k percentage to a channel accuracy in [0,1]. k must be 1, 5 or 10.
double accuracy_from_topk(const TopkRow& row, int k);

}  // namespace aacplan
