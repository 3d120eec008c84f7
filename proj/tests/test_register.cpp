#include <doctest.h>

#include <set>

#include "aacplan/errors.hpp"
#include "aacplan/register.hpp"

using namespace aacplan;

TEST_CASE("canonical register holds one real entry per trait kind") {
  const Register reg = canonical_register();

  int real_entries = 0;
  std::set<TraitKind> kinds;
  for (const auto& [name, d] : reg.entries()) {
    CHECK(name == d.name);
    if (d.category == Category::B) {
      ++real_entries;
      REQUIRE(d.base_kind.has_value());
      kinds.insert(*d.base_kind);
    }
  }
  CHECK(real_entries == 9);
  CHECK(kinds.size() == 9);
}

TEST_CASE("canonical register intermediates") {
  const Register reg = canonical_register();

  const TraitDescriptor& text = reg.descriptor("Text");
  CHECK(text.category == Category::I);
  CHECK(text.modality == Modality::Textual);
  CHECK_FALSE(text.base_kind.has_value());

  const TraitDescriptor& speech = reg.descriptor("SyntheticSpeech");
  CHECK(speech.category == Category::I);
  CHECK(speech.base_kind == TraitKind::AuditorySignal);

  const TraitDescriptor& avatar = reg.descriptor("AvatarVisual");
  CHECK(avatar.category == Category::I);
  CHECK(avatar.modality == Modality::Visual);
}

TEST_CASE("canonical register is deterministic") {
  CHECK(canonical_register() == canonical_register());
}

TEST_CASE("descriptor lookup") {
  const Register reg = canonical_register();

  const TraitDescriptor& gesture = reg.descriptor("HandGesture");
  CHECK(gesture.category == Category::B);
  CHECK(gesture.base_kind == TraitKind::HandGesture);
  CHECK(gesture.modality == Modality::Visual);

  CHECK_THROWS_AS((void)reg.descriptor("Unicorn"), UnknownTrait);
}

TEST_CASE("extending the register") {
  const Register reg = canonical_register();
  const std::size_t before = reg.size();

  const Register bigger = reg.extended(
      {"SyntheticEmotion", Category::I, TraitKind::EmotionalState,
       Modality::Visual});
  CHECK(bigger.size() == before + 1);
  CHECK(bigger.descriptor("SyntheticEmotion").category == Category::I);

  // value semantics: the source register is untouched
  CHECK(reg.size() == before);
  CHECK_FALSE(reg.contains("SyntheticEmotion"));

  CHECK_THROWS_AS(
      (void)reg.extended({"Text", Category::I, std::nullopt, Modality::Textual}),
      DuplicateName);
  CHECK_THROWS_AS(
      (void)reg.extended({"Mystery", Category::B, std::nullopt, Modality::Visual}),
      InvalidDescriptor);
}

TEST_CASE("trait kind round trip") {
  for (TraitKind kind : kAllTraitKinds) {
    CHECK(trait_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_FALSE(trait_kind_from_string("NotAKind").has_value());
}
