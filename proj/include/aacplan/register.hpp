#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace aacplan {

/// The nine real biometric trait types of the AAC register.
enum class TraitKind {
  Face,
  FacialExpression,
  LipMovement,
  EyeGaze,
  HandGesture,
  AuditorySignal,
  Breathing,
  EmotionalState,
  EEG,
};

inline constexpr std::array<TraitKind, 9> kAllTraitKinds = {
    TraitKind::Face,          TraitKind::FacialExpression, TraitKind::LipMovement,
    TraitKind::EyeGaze,       TraitKind::HandGesture,      TraitKind::AuditorySignal,
    TraitKind::Breathing,     TraitKind::EmotionalState,   TraitKind::EEG,
};

std::string_view to_string(TraitKind kind);
std::optional<TraitKind> trait_kind_from_string(std::string_view name);

/// B = real biometric trait produced by a person; I = intermediate or
/// synthetic data structure inside a channel.
enum class Category { B, I };

enum class Modality { Visual, Auditory, Tactile, Textual, Physiological };

std::string_view to_string(Category category);
std::string_view to_string(Modality modality);
std::optional<Category> category_from_string(std::string_view name);
std::optional<Modality> modality_from_string(std::string_view name);

/// One entry of the register. B-entries always carry a base_kind; I-entries
/// carry one only when they are a synthetic variant of a real trait (Text or
/// avatar renderings carry none).
struct TraitDescriptor {
  std::string name;
  Category category = Category::I;
  std::optional<TraitKind> base_kind;
  Modality modality = Modality::Visual;

  bool operator==(const TraitDescriptor&) const = default;
};

/// Name-keyed, immutable collection of trait descriptors.
class Register {
 public:
  Register() = default;

  bool contains(std::string_view name) const;

  /// Throws UnknownTrait when the name is absent.
  const TraitDescriptor& descriptor(std::string_view name) const;

  /// Returns a copy that additionally contains `entry`. Throws DuplicateName
  /// when the name is taken and InvalidDescriptor when a B-entry lacks a
  /// base_kind or a score-invariant is violated.
  Register extended(TraitDescriptor entry) const;

  const std::map<std::string, TraitDescriptor, std::less<>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const Register&) const = default;

 private:
  std::map<std::string, TraitDescriptor, std::less<>> entries_;
};

/// The built-in register: one B-entry per TraitKind plus the standard
/// intermediates (Text, synthetic traits, avatar renderings). Deterministic.
Register canonical_register();

}  // namespace aacplan
