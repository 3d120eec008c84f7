#include "aacplan/transform.hpp"

#include <utility>

#include "aacplan/errors.hpp"

namespace aacplan {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::I: return "I";
    case Mode::II: return "II";
    case Mode::III: return "III";
  }
  return "?";
}

Mode classify_mode(const TraitDescriptor& source, const TraitDescriptor& target) {
  const int real_endpoints = (source.category == Category::B ? 1 : 0) +
                             (target.category == Category::B ? 1 : 0);
  switch (real_endpoints) {
    case 0: return Mode::I;
    case 1: return Mode::II;
    default: return Mode::III;
  }
}

double miscommunication(const Transformation& t) { return 1.0 - t.accuracy; }

Catalog Catalog::added(std::string id, std::string_view source,
                       std::string_view target, double accuracy,
                       double latency_ms, double cost) const {
  if (id.empty()) throw InvalidTransformation("transformation id must be non-empty");
  if (contains(id)) throw DuplicateName("transformation id \"" + id + "\" already used");
  const TraitDescriptor& src = register_.descriptor(source);
  const TraitDescriptor& dst = register_.descriptor(target);
  if (!(accuracy >= 0.0 && accuracy <= 1.0)) {
    throw InvalidAccuracy("accuracy of \"" + id + "\" outside [0,1]");
  }
  if (latency_ms < 0.0 || cost < 0.0) {
    throw InvalidTransformation("latency and cost of \"" + id + "\" must be >= 0");
  }
  if (src.name == dst.name) {
    throw InvalidTransformation("self loop \"" + id + "\" on " + src.name);
  }
  if (src.category == Category::B && dst.category == Category::B &&
      src.base_kind == dst.base_kind && src.modality == dst.modality) {
    throw InvalidTransformation("edge \"" + id + "\" joins indistinguishable real traits");
  }

  Transformation t;
  t.id = id;
  t.source = std::string(source);
  t.target = std::string(target);
  t.mode = classify_mode(src, dst);
  t.accuracy = accuracy;
  t.latency_ms = latency_ms;
  t.cost = cost;

  Catalog out = *this;
  out.transformations_.emplace(std::move(id), std::move(t));
  return out;
}

bool Catalog::contains(std::string_view id) const {
  return transformations_.find(id) != transformations_.end();
}

const Transformation& Catalog::transformation(std::string_view id) const {
  auto it = transformations_.find(id);
  if (it == transformations_.end()) {
    throw UnknownStage("unknown transformation \"" + std::string(id) + "\"");
  }
  return it->second;
}

TopkRow TopkRow::make(std::string model, std::string dataset, double top1,
                      double top5, double top10) {
  for (double v : {top1, top5, top10}) {
    if (!(v >= 0.0 && v <= 100.0)) {
      throw InvalidAccuracy("top-k percentage outside [0,100] for " + model);
    }
  }
  if (!(top1 <= top5 && top5 <= top10)) {
    throw InvalidAccuracy("top-k values of " + model + " are not monotone");
  }
  return TopkRow{std::move(model), std::move(dataset), top1, top5, top10};
}

const std::vector<TopkRow>& builtin_topk_table() {
  static const std::vector<TopkRow> table = {
      TopkRow::make("Pose-GRU", "WLASL-2000", 22.54, 49.81, 61.38),
      TopkRow::make("Pose-TGCN", "WLASL-2000", 23.65, 51.75, 62.24),
      TopkRow::make("I3D", "WLASL-2000", 32.48, 57.31, 66.31),
      TopkRow::make("VGG-GRU", "WLASL-2000", 8.44, 23.58, 32.58),
      TopkRow::make("Transformer encoder (hands+body keypoints)", "WLASL-2000",
                    22.96, 53.12, 65.60),
      TopkRow::make("Transformer encoder (hands+body+face mesh keypoints)",
                    "WLASL-2000", 21.00, 51.30, 62.70),
      TopkRow::make("Transformer encoder + focus projection", "WLASL-2000",
                    26.06, 56.91, 68.97),
  };
  return table;
}

const TopkRow* find_topk_row(std::string_view model) {
  for (const TopkRow& row : builtin_topk_table()) {
    if (row.model == model) return &row;
  }
  return nullptr;
}

double accuracy_from_topk(const TopkRow& row, int k) {
  switch (k) {
    case 1: return row.top1 / 100.0;
    case 5: return row.top5 / 100.0;
    case 10: return row.top10 / 100.0;
    default: throw InvalidAccuracy("top-k selector must be 1, 5 or 10");
  }
}

}  // namespace aacplan
