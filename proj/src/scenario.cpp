#include "aacplan/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aacplan/errors.hpp"

namespace aacplan {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// strict-schema helpers

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end()) {
      throw ValidationError(path, "unknown key \"" + key + "\"");
    }
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const json* value = find(obj, key);
  if (!value) throw ValidationError(path, "missing key \"" + std::string(key) + "\"");
  return *value;
}

std::string get_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ValidationError(path, "expected a string");
  return value.get<std::string>();
}

double get_number(const json& value, const std::string& path) {
  if (!value.is_number()) throw ValidationError(path, "expected a number");
  return value.get<double>();
}

std::uint64_t get_count(const json& value, const std::string& path) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ValidationError(path, "expected a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

const json& get_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ValidationError(path, "expected an array");
  return value;
}

const json& get_object(const json& value, const std::string& path) {
  if (!value.is_object()) throw ValidationError(path, "expected an object");
  return value;
}

std::string at(const std::string& path, const std::string& key) {
  return path + "/" + key;
}
std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// section parsers

std::vector<TraitDescriptor> parse_register_extensions(const json& arr,
                                                       const std::string& path) {
  std::vector<TraitDescriptor> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(path, i);
    const json& obj = get_object(arr[i], p);
    check_keys(obj, p, {"name", "category", "base_kind", "modality"});
    TraitDescriptor d;
    d.name = get_string(require(obj, "name", p), at(p, "name"));
    const std::string cat = get_string(require(obj, "category", p), at(p, "category"));
    auto category = category_from_string(cat);
    if (!category) throw ValidationError(at(p, "category"), "expected \"B\" or \"I\"");
    d.category = *category;
    if (const json* kind = find(obj, "base_kind")) {
      auto parsed = trait_kind_from_string(get_string(*kind, at(p, "base_kind")));
      if (!parsed) throw ValidationError(at(p, "base_kind"), "unknown trait kind");
      d.base_kind = *parsed;
    }
    const std::string mod = get_string(require(obj, "modality", p), at(p, "modality"));
    auto modality = modality_from_string(mod);
    if (!modality) throw ValidationError(at(p, "modality"), "unknown modality");
    d.modality = *modality;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Scenario::TransformationSpec> parse_transformations(
    const json& arr, const std::string& path) {
  std::vector<Scenario::TransformationSpec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(path, i);
    const json& obj = get_object(arr[i], p);
    check_keys(obj, p, {"id", "source", "target", "accuracy", "topk_ref",
                        "latency_ms", "cost"});
    Scenario::TransformationSpec spec;
    spec.id = get_string(require(obj, "id", p), at(p, "id"));
    spec.source = get_string(require(obj, "source", p), at(p, "source"));
    spec.target = get_string(require(obj, "target", p), at(p, "target"));
    const json* accuracy = find(obj, "accuracy");
    const json* topk = find(obj, "topk_ref");
    if ((accuracy != nullptr) == (topk != nullptr)) {
      throw ValidationError(p, "exactly one of \"accuracy\" or \"topk_ref\" required");
    }
    if (accuracy) spec.accuracy = get_number(*accuracy, at(p, "accuracy"));
    if (topk) {
      const std::string tp = at(p, "topk_ref");
      const json& ref = get_object(*topk, tp);
      check_keys(ref, tp, {"model", "k"});
      TopkRef parsed;
      parsed.model = get_string(require(ref, "model", tp), at(tp, "model"));
      parsed.k = static_cast<int>(get_count(require(ref, "k", tp), at(tp, "k")));
      if (parsed.k != 1 && parsed.k != 5 && parsed.k != 10) {
        throw ValidationError(at(tp, "k"), "k must be 1, 5 or 10");
      }
      if (!find_topk_row(parsed.model)) {
        throw ValidationError(at(tp, "model"),
                              "unknown model \"" + parsed.model + "\"");
      }
      spec.topk_ref = std::move(parsed);
    }
    if (const json* latency = find(obj, "latency_ms")) {
      spec.latency_ms = get_number(*latency, at(p, "latency_ms"));
    }
    if (const json* cost = find(obj, "cost")) {
      spec.cost = get_number(*cost, at(p, "cost"));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<UserProfile> parse_profiles(const json& arr, const std::string& path) {
  std::vector<UserProfile> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(path, i);
    const json& obj = get_object(arr[i], p);
    check_keys(obj, p, {"id", "produces", "perceives", "overrides"});
    UserProfile profile;
    profile.id = get_string(require(obj, "id", p), at(p, "id"));
    for (const char* key : {"produces", "perceives"}) {
      const json& names = get_array(require(obj, key, p), at(p, key));
      auto& target = std::string(key) == "produces" ? profile.produces : profile.perceives;
      for (std::size_t k = 0; k < names.size(); ++k) {
        target.insert(get_string(names[k], at(at(p, key), k)));
      }
    }
    if (const json* overrides = find(obj, "overrides")) {
      const std::string op = at(p, "overrides");
      for (const auto& [id, value] : get_object(*overrides, op).items()) {
        profile.overrides[id] = get_number(value, at(op, id));
      }
    }
    out.push_back(std::move(profile));
  }
  return out;
}

Objective parse_objective(const json& obj, const std::string& path) {
  check_keys(obj, path, {"w_acc", "w_lat", "w_cost"});
  Objective objective;
  if (const json* v = find(obj, "w_acc")) objective.w_acc = get_number(*v, at(path, "w_acc"));
  if (const json* v = find(obj, "w_lat")) objective.w_lat = get_number(*v, at(path, "w_lat"));
  if (const json* v = find(obj, "w_cost")) objective.w_cost = get_number(*v, at(path, "w_cost"));
  return objective;
}

std::vector<Scenario::AdaptationSpec> parse_adaptation(const json& arr,
                                                       const std::string& path) {
  std::vector<Scenario::AdaptationSpec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(path, i);
    const json& obj = get_object(arr[i], p);
    check_keys(obj, p, {"user", "transformation", "mode", "prior", "context_bias", "tau"});
    Scenario::AdaptationSpec spec;
    spec.user = get_string(require(obj, "user", p), at(p, "user"));
    spec.transformation =
        get_string(require(obj, "transformation", p), at(p, "transformation"));
    auto mode = adapt_mode_from_string(
        get_string(require(obj, "mode", p), at(p, "mode")));
    if (!mode) {
      throw ValidationError(at(p, "mode"),
                            "expected \"manual\", \"context_rule\" or \"online\"");
    }
    spec.mode = *mode;
    if (const json* prior = find(obj, "prior")) {
      spec.prior = get_number(*prior, at(p, "prior"));
      if (!(spec.prior >= 0.0 && spec.prior <= 1.0)) {
        throw ValidationError(at(p, "prior"), "prior outside [0,1]");
      }
    }
    if (const json* bias = find(obj, "context_bias")) {
      if (spec.mode != AdaptMode::ContextRule) {
        throw ValidationError(at(p, "context_bias"),
                              "context_bias applies to context_rule mode only");
      }
      spec.context_bias = get_number(*bias, at(p, "context_bias"));
    }
    if (const json* tau = find(obj, "tau")) {
      spec.tau = get_number(*tau, at(p, "tau"));
      if (!(spec.tau > 0.0)) throw ValidationError(at(p, "tau"), "tau must be > 0");
    }
    out.push_back(std::move(spec));
  }
  return out;
}

Scenario::GridSpec parse_grid(const json& obj, const std::string& path) {
  check_keys(obj, path, {"rows", "cols", "cells"});
  Scenario::GridSpec grid;
  const json& rows = get_array(require(obj, "rows", path), at(path, "rows"));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = at(at(path, "rows"), i);
    const json& row = get_object(rows[i], p);
    check_keys(row, p, {"label", "name"});
    grid.rows.push_back({get_string(require(row, "label", p), at(p, "label")),
                         get_string(require(row, "name", p), at(p, "name"))});
  }
  const json& cols = get_array(require(obj, "cols", path), at(path, "cols"));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string p = at(at(path, "cols"), i);
    const json& col = get_object(cols[i], p);
    check_keys(col, p, {"label", "name", "cost"});
    grid.cols.push_back({get_string(require(col, "label", p), at(p, "label")),
                         get_string(require(col, "name", p), at(p, "name")),
                         get_number(require(col, "cost", p), at(p, "cost"))});
  }
  const json& cells = get_array(require(obj, "cells", path), at(path, "cells"));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = at(at(path, "cells"), i);
    const json& cell = get_object(cells[i], p);
    check_keys(cell, p, {"row", "col", "score"});
    JudgmentGrid::Cell parsed;
    parsed.row = get_string(require(cell, "row", p), at(p, "row"));
    parsed.col = get_string(require(cell, "col", p), at(p, "col"));
    if (const json* score = find(cell, "score")) {
      parsed.score = get_number(*score, at(p, "score"));
    }
    grid.cells.push_back(std::move(parsed));
  }
  return grid;
}

Scenario::CheckpointSpec parse_checkpoint(const json& obj, const std::string& path) {
  check_keys(obj, path, {"points", "n", "seed"});
  Scenario::CheckpointSpec spec;
  const json& points = get_array(require(obj, "points", path), at(path, "points"));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string p = at(at(path, "points"), i);
    const json& point = get_object(points[i], p);
    check_keys(point, p, {"index", "name", "plan", "plan_ref", "max_retries",
                          "retry_boost"});
    Scenario::PointSpec parsed;
    parsed.index = static_cast<int>(get_count(require(point, "index", p), at(p, "index")));
    auto name = point_name_from_string(
        get_string(require(point, "name", p), at(p, "name")));
    if (!name) throw ValidationError(at(p, "name"), "unknown security point name");
    parsed.name = *name;
    const json* plan = find(point, "plan");
    const json* ref = find(point, "plan_ref");
    if ((plan != nullptr) == (ref != nullptr)) {
      throw ValidationError(p, "exactly one of \"plan\" or \"plan_ref\" required");
    }
    if (plan) {
      const std::string pp = at(p, "plan");
      const json& pair = get_object(*plan, pp);
      check_keys(pair, pp, {"sender", "receiver"});
      parsed.plan_sender = get_string(require(pair, "sender", pp), at(pp, "sender"));
      parsed.plan_receiver =
          get_string(require(pair, "receiver", pp), at(pp, "receiver"));
    } else {
      parsed.plan_ref = get_string(*ref, at(p, "plan_ref"));
    }
    if (const json* retries = find(point, "max_retries")) {
      parsed.max_retries = static_cast<int>(get_count(*retries, at(p, "max_retries")));
    }
    if (const json* boost = find(point, "retry_boost")) {
      parsed.retry_boost = get_number(*boost, at(p, "retry_boost"));
    }
    spec.points.push_back(std::move(parsed));
  }
  if (const json* n = find(obj, "n")) spec.n = get_count(*n, at(path, "n"));
  if (const json* seed = find(obj, "seed")) spec.seed = get_count(*seed, at(path, "seed"));
  return spec;
}

// ---------------------------------------------------------------------------
// cross-reference validation

void cross_validate(const Scenario& s) {
  // Register and catalog construction revalidate their own invariants; run
  // them here so dangling references surface as ValidationError.
  Register reg;
  try {
    reg = build_register(s);
  } catch (const Error& e) {
    throw ValidationError("/register_extensions", e.what());
  }
  try {
    build_catalog(s, reg);
  } catch (const Error& e) {
    throw ValidationError("/transformations", e.what());
  }

  std::set<std::string> transformation_ids;
  for (const auto& t : s.transformations) transformation_ids.insert(t.id);

  std::set<std::string> profile_ids;
  for (std::size_t i = 0; i < s.profiles.size(); ++i) {
    const UserProfile& profile = s.profiles[i];
    const std::string p = at("/profiles", i);
    if (!profile_ids.insert(profile.id).second) {
      throw ValidationError(p, "duplicate profile id \"" + profile.id + "\"");
    }
    try {
      validate_profile(profile, reg);
    } catch (const Error& e) {
      throw ValidationError(p, e.what());
    }
    for (const auto& [id, value] : profile.overrides) {
      (void)value;
      if (!transformation_ids.contains(id)) {
        throw ValidationError(at(p, "overrides"),
                              "unknown transformation \"" + id + "\"");
      }
    }
  }

  std::set<std::string> team_seen;
  for (std::size_t i = 0; i < s.team.size(); ++i) {
    if (!profile_ids.contains(s.team[i])) {
      throw ValidationError(at("/team", i), "unknown profile \"" + s.team[i] + "\"");
    }
    if (!team_seen.insert(s.team[i]).second) {
      throw ValidationError(at("/team", i), "profile \"" + s.team[i] + "\" listed twice");
    }
  }

  for (std::size_t i = 0; i < s.adaptation.size(); ++i) {
    const auto& a = s.adaptation[i];
    const std::string p = at("/adaptation", i);
    if (!profile_ids.contains(a.user)) {
      throw ValidationError(at(p, "user"), "unknown profile \"" + a.user + "\"");
    }
    if (!transformation_ids.contains(a.transformation)) {
      throw ValidationError(at(p, "transformation"),
                            "unknown transformation \"" + a.transformation + "\"");
    }
  }

  if (s.grid) {
    try {
      build_grid(s);
    } catch (const Error& e) {
      throw ValidationError("/grid", e.what());
    }
  }

  if (s.checkpoint) {
    const auto& points = s.checkpoint->points;
    if (points.size() != 6) {
      throw ValidationError("/checkpoint/points", "exactly 6 points required");
    }
    std::set<std::string> earlier;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::string p = at("/checkpoint/points", i);
      if (points[i].index != static_cast<int>(i) + 1) {
        throw ValidationError(at(p, "index"), "points must be ordered 1..6");
      }
      if (points[i].plan_ref) {
        if (!earlier.contains(*points[i].plan_ref)) {
          throw ValidationError(at(p, "plan_ref"),
                                "must reference an earlier point's name");
        }
      } else {
        for (const auto& id : {*points[i].plan_sender, *points[i].plan_receiver}) {
          if (!profile_ids.contains(id)) {
            throw ValidationError(at(p, "plan"), "unknown profile \"" + id + "\"");
          }
        }
      }
      if (points[i].max_retries < 0) {
        throw ValidationError(at(p, "max_retries"), "must be >= 0");
      }
      if (!(points[i].retry_boost >= 0.0 && points[i].retry_boost <= 1.0)) {
        throw ValidationError(at(p, "retry_boost"), "must lie in [0,1]");
      }
      earlier.insert(std::string(to_string(points[i].name)));
    }
    if (s.checkpoint->n == 0) {
      throw ValidationError("/checkpoint/n", "must be >= 1");
    }
  }
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const int line = 1 + static_cast<int>(std::count(
                             text.begin(), text.begin() + std::min(byte, text.size()),
                             '\n'));
    throw ParseError(line, e.what());
  }
  if (!doc.is_object()) throw ValidationError("/", "expected a top-level object");
  check_keys(doc, "/",
             {"register_extensions", "transformations", "profiles", "objective",
              "team", "adaptation", "grid", "checkpoint"});

  Scenario s;
  if (const json* v = find(doc, "register_extensions")) {
    s.register_extensions =
        parse_register_extensions(get_array(*v, "/register_extensions"),
                                  "/register_extensions");
  }
  if (const json* v = find(doc, "transformations")) {
    s.transformations =
        parse_transformations(get_array(*v, "/transformations"), "/transformations");
  }
  if (const json* v = find(doc, "profiles")) {
    s.profiles = parse_profiles(get_array(*v, "/profiles"), "/profiles");
  }
  if (const json* v = find(doc, "objective")) {
    s.objective = parse_objective(get_object(*v, "/objective"), "/objective");
  }
  if (const json* v = find(doc, "team")) {
    const json& arr = get_array(*v, "/team");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      s.team.push_back(get_string(arr[i], at("/team", i)));
    }
  }
  if (const json* v = find(doc, "adaptation")) {
    s.adaptation = parse_adaptation(get_array(*v, "/adaptation"), "/adaptation");
  }
  if (const json* v = find(doc, "grid")) {
    s.grid = parse_grid(get_object(*v, "/grid"), "/grid");
  }
  if (const json* v = find(doc, "checkpoint")) {
    s.checkpoint = parse_checkpoint(get_object(*v, "/checkpoint"), "/checkpoint");
  }

  cross_validate(s);
  return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open \"" + path.string() + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
  json doc = json::object();
  if (!s.register_extensions.empty()) {
    json arr = json::array();
    for (const auto& d : s.register_extensions) {
      json obj{{"name", d.name}, {"category", std::string(to_string(d.category))}};
      if (d.base_kind) obj["base_kind"] = std::string(to_string(*d.base_kind));
      obj["modality"] = std::string(to_string(d.modality));
      arr.push_back(std::move(obj));
    }
    doc["register_extensions"] = std::move(arr);
  }
  if (!s.transformations.empty()) {
    json arr = json::array();
    for (const auto& t : s.transformations) {
      json obj{{"id", t.id}, {"source", t.source}, {"target", t.target}};
      if (t.accuracy) obj["accuracy"] = *t.accuracy;
      if (t.topk_ref) {
        obj["topk_ref"] = json{{"model", t.topk_ref->model}, {"k", t.topk_ref->k}};
      }
      obj["latency_ms"] = t.latency_ms;
      obj["cost"] = t.cost;
      arr.push_back(std::move(obj));
    }
    doc["transformations"] = std::move(arr);
  }
  if (!s.profiles.empty()) {
    json arr = json::array();
    for (const auto& p : s.profiles) {
      json obj{{"id", p.id},
               {"produces", json(p.produces)},
               {"perceives", json(p.perceives)}};
      if (!p.overrides.empty()) obj["overrides"] = json(p.overrides);
      arr.push_back(std::move(obj));
    }
    doc["profiles"] = std::move(arr);
  }
  doc["objective"] = json{{"w_acc", s.objective.w_acc},
                          {"w_lat", s.objective.w_lat},
                          {"w_cost", s.objective.w_cost}};
  if (!s.team.empty()) doc["team"] = json(s.team);
  if (!s.adaptation.empty()) {
    json arr = json::array();
    for (const auto& a : s.adaptation) {
      json obj{{"user", a.user},
               {"transformation", a.transformation},
               {"mode", std::string(to_string(a.mode))},
               {"prior", a.prior}};
      if (a.context_bias) obj["context_bias"] = *a.context_bias;
      obj["tau"] = a.tau;
      arr.push_back(std::move(obj));
    }
    doc["adaptation"] = std::move(arr);
  }
  if (s.grid) {
    json rows = json::array();
    for (const auto& r : s.grid->rows) {
      rows.push_back(json{{"label", r.label}, {"name", r.name}});
    }
    json cols = json::array();
    for (const auto& c : s.grid->cols) {
      cols.push_back(json{{"label", c.label}, {"name", c.name}, {"cost", c.cost}});
    }
    json cells = json::array();
    for (const auto& c : s.grid->cells) {
      json obj{{"row", c.row}, {"col", c.col}};
      obj["score"] = c.score ? json(*c.score) : json(nullptr);
      cells.push_back(std::move(obj));
    }
    doc["grid"] = json{{"rows", std::move(rows)},
                       {"cols", std::move(cols)},
                       {"cells", std::move(cells)}};
  }
  if (s.checkpoint) {
    json points = json::array();
    for (const auto& p : s.checkpoint->points) {
      json obj{{"index", p.index}, {"name", std::string(to_string(p.name))}};
      if (p.plan_ref) {
        obj["plan_ref"] = *p.plan_ref;
      } else {
        obj["plan"] = json{{"sender", *p.plan_sender}, {"receiver", *p.plan_receiver}};
      }
      obj["max_retries"] = p.max_retries;
      obj["retry_boost"] = p.retry_boost;
      points.push_back(std::move(obj));
    }
    doc["checkpoint"] = json{{"points", std::move(points)},
                             {"n", s.checkpoint->n},
                             {"seed", s.checkpoint->seed}};
  }
  return doc.dump(2) + "\n";
}

Register build_register(const Scenario& scenario) {
  Register reg = canonical_register();
  for (const TraitDescriptor& d : scenario.register_extensions) {
    reg = reg.extended(d);
  }
  return reg;
}

Catalog build_catalog(const Scenario& scenario, const Register& reg) {
  Catalog catalog(reg);
  for (const auto& t : scenario.transformations) {
    const double accuracy =
        t.accuracy ? *t.accuracy
                   : accuracy_from_topk(*find_topk_row(t.topk_ref->model),
                                        t.topk_ref->k);
    catalog = catalog.added(t.id, t.source, t.target, accuracy, t.latency_ms, t.cost);
  }
  return catalog;
}

const UserProfile& profile_of(const Scenario& scenario, const std::string& id) {
  for (const UserProfile& profile : scenario.profiles) {
    if (profile.id == id) return profile;
  }
  throw UnknownMember("no profile \"" + id + "\"");
}

Team build_team(const Scenario& scenario) {
  Team team;
  for (const std::string& id : scenario.team) {
    team.members.push_back(profile_of(scenario, id));
  }
  return team;
}

JudgmentGrid build_grid(const Scenario& scenario) {
  if (!scenario.grid) throw InvalidDescriptor("scenario has no grid section");
  return JudgmentGrid::make(scenario.grid->rows, scenario.grid->cols,
                            scenario.grid->cells);
}

std::vector<AdaptiveEstimate> build_estimates(const Scenario& scenario) {
  std::vector<AdaptiveEstimate> out;
  for (const auto& a : scenario.adaptation) {
    AdaptiveEstimate e;
    e.user = a.user;
    e.transformation = a.transformation;
    e.mode = a.mode;
    e.prior = a.prior;
    e.context_bias = a.context_bias.value_or(0.0);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<UserProfile> apply_adaptation(const Scenario& scenario) {
  std::vector<UserProfile> profiles = scenario.profiles;
  for (const AdaptiveEstimate& e : build_estimates(scenario)) {
    for (UserProfile& profile : profiles) {
      if (profile.id == e.user) profile.overrides[e.transformation] = estimate(e);
    }
  }
  return profiles;
}

std::vector<SecurityPoint> build_pipeline(const Scenario& scenario,
                                          const Catalog& catalog) {
  if (!scenario.checkpoint) throw InvalidDescriptor("scenario has no checkpoint section");
  const std::vector<UserProfile> adapted = apply_adaptation(scenario);
  auto adapted_profile = [&](const std::string& id) -> const UserProfile& {
    for (const UserProfile& p : adapted) {
      if (p.id == id) return p;
    }
    throw UnknownMember("no profile \"" + id + "\"");
  };

  std::vector<SecurityPoint> pipeline;
  for (const auto& spec : scenario.checkpoint->points) {
    SecurityPoint point;
    point.index = spec.index;
    point.name = spec.name;
    point.max_retries = spec.max_retries;
    point.retry_boost = spec.retry_boost;
    if (spec.plan_ref) {
      auto it = std::find_if(pipeline.begin(), pipeline.end(), [&](const SecurityPoint& p) {
        return to_string(p.name) == *spec.plan_ref;
      });
      if (it == pipeline.end()) {
        throw ValidationError("/checkpoint/points", "unresolved plan_ref \"" +
                                                        *spec.plan_ref + "\"");
      }
      point.plan = it->plan;
    } else {
      point.plan = plan_channel(adapted_profile(*spec.plan_sender),
                                adapted_profile(*spec.plan_receiver), catalog,
                                scenario.objective);
    }
    pipeline.push_back(std::move(point));
  }
  validate_pipeline(pipeline);
  return pipeline;
}

}  // namespace aacplan
