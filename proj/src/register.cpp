#include "aacplan/register.hpp"

#include <utility>

#include "aacplan/errors.hpp"

namespace aacplan {

std::string_view to_string(TraitKind kind) {
  switch (kind) {
    case TraitKind::Face: return "Face";
    case TraitKind::FacialExpression: return "FacialExpression";
    case TraitKind::LipMovement: return "LipMovement";
    case TraitKind::EyeGaze: return "EyeGaze";
    case TraitKind::HandGesture: return "HandGesture";
    case TraitKind::AuditorySignal: return "AuditorySignal";
    case TraitKind::Breathing: return "Breathing";
    case TraitKind::EmotionalState: return "EmotionalState";
    case TraitKind::EEG: return "EEG";
  }
  return "?";
}

std::optional<TraitKind> trait_kind_from_string(std::string_view name) {
  for (TraitKind kind : kAllTraitKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Category category) {
  return category == Category::B ? "B" : "I";
}

std::optional<Category> category_from_string(std::string_view name) {
  if (name == "B") return Category::B;
  if (name == "I") return Category::I;
  return std::nullopt;
}

std::string_view to_string(Modality modality) {
  switch (modality) {
    case Modality::Visual: return "visual";
    case Modality::Auditory: return "auditory";
    case Modality::Tactile: return "tactile";
    case Modality::Textual: return "textual";
    case Modality::Physiological: return "physiological";
  }
  return "?";
}

std::optional<Modality> modality_from_string(std::string_view name) {
  for (Modality m : {Modality::Visual, Modality::Auditory, Modality::Tactile,
                     Modality::Textual, Modality::Physiological}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool Register::contains(std::string_view name) const {
  return entries_.find(name) != entries_.end();
}

const TraitDescriptor& Register::descriptor(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw UnknownTrait("unknown trait \"" + std::string(name) + "\"");
  }
  return it->second;
}

Register Register::extended(TraitDescriptor entry) const {
  if (entry.name.empty()) {
    throw InvalidDescriptor("descriptor name must be non-empty");
  }
  if (entry.category == Category::B && !entry.base_kind) {
    throw InvalidDescriptor("B-entry \"" + entry.name + "\" lacks a base_kind");
  }
  if (contains(entry.name)) {
    throw DuplicateName("trait \"" + entry.name + "\" already registered");
  }
  Register out = *this;
  std::string key = entry.name;
  out.entries_.emplace(std::move(key), std::move(entry));
  return out;
}

namespace {

Modality real_trait_modality(TraitKind kind) {
  switch (kind) {
    case TraitKind::Face:
    case TraitKind::FacialExpression:
    case TraitKind::LipMovement:
    case TraitKind::EyeGaze:
    case TraitKind::HandGesture:
      return Modality::Visual;
    case TraitKind::AuditorySignal:
      return Modality::Auditory;
    case TraitKind::Breathing:
    case TraitKind::EmotionalState:
    case TraitKind::EEG:
      return Modality::Physiological;
  }
  return Modality::Visual;
}

}  // namespace

Register canonical_register() {
  Register reg;
  for (TraitKind kind : kAllTraitKinds) {
    reg = reg.extended({std::string(to_string(kind)), Category::B, kind,
                        real_trait_modality(kind)});
  }
  reg = reg.extended({"Text", Category::I, std::nullopt, Modality::Textual});
  reg = reg.extended({"SyntheticSpeech", Category::I, TraitKind::AuditorySignal,
                      Modality::Auditory});
  reg = reg.extended({"SyntheticGesture", Category::I, TraitKind::HandGesture,
                      Modality::Visual});
  reg = reg.extended({"SyntheticFacialExpression", Category::I,
                      TraitKind::FacialExpression, Modality::Visual});
  reg = reg.extended({"SyntheticEyeGaze", Category::I, TraitKind::EyeGaze,
                      Modality::Visual});
  reg = reg.extended({"SyntheticBreathing", Category::I, TraitKind::Breathing,
                      Modality::Physiological});
  reg = reg.extended({"SyntheticEEG", Category::I, TraitKind::EEG,
                      Modality::Physiological});
  reg = reg.extended({"AvatarVisual", Category::I, std::nullopt, Modality::Visual});
  reg = reg.extended({"AvatarAudio", Category::I, std::nullopt, Modality::Auditory});
  return reg;
}

}  // namespace aacplan
