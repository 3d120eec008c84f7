#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aacplan/adapt.hpp"
#include "aacplan/errors.hpp"
#include "aacplan/report.hpp"
#include "aacplan/rng.hpp"
#include "aacplan/scenario.hpp"

namespace {

using aacplan::Scenario;
using json = nlohmann::ordered_json;

struct Options {
  std::string scenario_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t n = 0;
  bool n_given = false;
  bool exact = false;
  std::string from_id, to_id;
  std::string needs;
  std::string sender_id, receiver_id;
  std::string format;  // empty = subcommand default
  double true_accuracy = 0.85;
};

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw aacplan::Error("cannot write \"" + path.string() + "\"");
  out << content;
}

void emit(const Options& opt, const std::string& name, const std::string& content) {
  if (opt.out_dir.empty()) {
    std::cout << content;
  } else {
    write_file(opt.out_dir, name, content);
  }
}

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

aacplan::Team scenario_team(const Scenario& scenario) {
  if (!scenario.team.empty()) return aacplan::build_team(scenario);
  return aacplan::Team{scenario.profiles};
}

int run_validate(const Options& opt) {
  aacplan::parse_scenario(opt.scenario_path);
  return 0;
}

int run_plan(const Options& opt, bool reverse) {
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  const aacplan::Register reg = aacplan::build_register(scenario);
  const aacplan::Catalog catalog = aacplan::build_catalog(scenario, reg);
  const aacplan::ChannelPlan plan =
      reverse ? aacplan::reverse_channel(aacplan::profile_of(scenario, opt.sender_id),
                                         aacplan::profile_of(scenario, opt.receiver_id),
                                         catalog, scenario.objective)
              : aacplan::plan_channel(aacplan::profile_of(scenario, opt.sender_id),
                                      aacplan::profile_of(scenario, opt.receiver_id),
                                      catalog, scenario.objective);
  if (opt.format == "csv") {
    emit(opt, "plan.csv", aacplan::plan_to_csv(plan, catalog));
  } else {
    emit(opt, "plan.json", aacplan::plan_to_json(plan, catalog).dump(2) + "\n");
  }
  return 0;
}

int run_route(const Options& opt) {
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  const aacplan::Register reg = aacplan::build_register(scenario);
  const aacplan::Catalog catalog = aacplan::build_catalog(scenario, reg);
  const aacplan::Team team = scenario_team(scenario);
  const aacplan::ChannelPlan plan =
      aacplan::route(team, opt.from_id, opt.to_id, catalog, scenario.objective);
  if (opt.format == "csv") {
    emit(opt, "route.csv", aacplan::plan_to_csv(plan, catalog));
  } else {
    emit(opt, "route.json", aacplan::plan_to_json(plan, catalog).dump(2) + "\n");
  }
  return 0;
}

int run_matrix(const Options& opt) {
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  const aacplan::Register reg = aacplan::build_register(scenario);
  const aacplan::Catalog catalog = aacplan::build_catalog(scenario, reg);
  const aacplan::ReachabilityMatrix matrix =
      aacplan::reachability_matrix(scenario_team(scenario), catalog, scenario.objective);
  if (opt.format == "json") {
    emit(opt, "matrix.json", aacplan::matrix_to_json(matrix).dump(2) + "\n");
  } else {
    emit(opt, "matrix.csv", aacplan::matrix_to_csv(matrix));
  }
  return 0;
}

int run_elicit(const Options& opt) {
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  const aacplan::JudgmentGrid grid = aacplan::build_grid(scenario);
  std::set<std::string> needs;
  if (opt.needs.empty()) {
    for (const auto& row : grid.rows()) needs.insert(row.label);
  } else {
    for (const auto& label : split_csv_list(opt.needs)) needs.insert(label);
  }
  const aacplan::Cluster cluster =
      opt.exact ? aacplan::cover_exact(grid, needs) : aacplan::cover_greedy(grid, needs);
  if (opt.format == "csv") {
    emit(opt, "cluster.csv", aacplan::cluster_to_csv(grid, cluster));
  } else {
    emit(opt, "cluster.json", aacplan::cluster_to_json(grid, cluster).dump(2) + "\n");
  }
  return 0;
}

int run_adapt_demo(const Options& opt) {
  const std::uint64_t n = opt.n_given ? opt.n : 1000;
  constexpr double kTau = 0.02;
  aacplan::AdaptiveEstimate est;
  est.user = "demo";
  est.transformation = "demo";
  est.mode = aacplan::AdaptMode::Online;
  est.prior = 0.5;

  aacplan::RngStream rng = aacplan::RngStream::derive(opt.seed, 0);
  std::ostringstream out;
  out << "trial,outcome,estimate,half_width,converged\n";
  for (std::uint64_t t = 1; t <= n; ++t) {
    const bool success = rng.bernoulli(opt.true_accuracy);
    est = aacplan::observe(std::move(est), success);
    const double width = aacplan::half_width(est, 0.95);
    out << t << ',' << (success ? 1 : 0) << ','
        << aacplan::fmt_double(aacplan::estimate(est)) << ','
        << aacplan::fmt_double(width) << ',' << (width < kTau ? 1 : 0) << '\n';
  }
  emit(opt, "adapt_demo.csv", out.str());
  return 0;
}

struct CheckpointArtifacts {
  json report;
  std::string points_csv;
};

CheckpointArtifacts run_checkpoint_sim(const Scenario& scenario, const Options& opt) {
  if (!scenario.checkpoint) {
    throw aacplan::ValidationError("/checkpoint",
                                   "section required by simulate-checkpoint");
  }
  const aacplan::Register reg = aacplan::build_register(scenario);
  const aacplan::Catalog catalog = aacplan::build_catalog(scenario, reg);
  const std::vector<aacplan::SecurityPoint> pipeline =
      aacplan::build_pipeline(scenario, catalog);

  // The traveller moving through the pipeline is the first point's sender.
  const std::vector<aacplan::UserProfile> adapted = aacplan::apply_adaptation(scenario);
  const std::string& traveller_id = *scenario.checkpoint->points.front().plan_sender;
  const aacplan::UserProfile* traveller = nullptr;
  for (const auto& profile : adapted) {
    if (profile.id == traveller_id) traveller = &profile;
  }
  if (!traveller) throw aacplan::UnknownMember("no profile \"" + traveller_id + "\"");

  const std::uint64_t n = opt.n_given ? opt.n : scenario.checkpoint->n;
  const std::uint64_t seed = opt.seed_given ? opt.seed : scenario.checkpoint->seed;
  const aacplan::SimulationReport report =
      aacplan::monte_carlo(pipeline, *traveller, catalog, n, seed);

  CheckpointArtifacts artifacts;
  artifacts.report = aacplan::simulation_to_json(report, pipeline);
  artifacts.report["analytic_clear_prob"] =
      aacplan::analytic_clear_prob(pipeline, *traveller, catalog);
  artifacts.points_csv =
      aacplan::simulation_points_csv(report, pipeline, *traveller, catalog);
  return artifacts;
}

int run_simulate_checkpoint(const Options& opt) {
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  CheckpointArtifacts artifacts = run_checkpoint_sim(scenario, opt);
  if (opt.out_dir.empty()) {
    std::cout << artifacts.report.dump(2) << "\n";
  } else {
    write_file(opt.out_dir, "checkpoint_report.json", artifacts.report.dump(2) + "\n");
    write_file(opt.out_dir, "checkpoint_points.csv", artifacts.points_csv);
  }
  return 0;
}

int run_report(const Options& opt) {
  if (opt.out_dir.empty()) {
    throw aacplan::Error("report requires --out DIR");
  }
  const Scenario scenario = aacplan::parse_scenario(opt.scenario_path);
  write_file(opt.out_dir, "scenario_normalized.json",
             aacplan::serialize_scenario(scenario));
  write_file(opt.out_dir, "topk_table.json", aacplan::topk_to_json().dump(2) + "\n");
  write_file(opt.out_dir, "topk_table.csv", aacplan::topk_to_csv());

  const aacplan::Register reg = aacplan::build_register(scenario);
  const aacplan::Catalog catalog = aacplan::build_catalog(scenario, reg);
  if (scenario.profiles.size() >= 2) {
    const aacplan::ReachabilityMatrix matrix = aacplan::reachability_matrix(
        scenario_team(scenario), catalog, scenario.objective);
    write_file(opt.out_dir, "matrix.csv", aacplan::matrix_to_csv(matrix));
  }
  if (scenario.grid) {
    const aacplan::JudgmentGrid grid = aacplan::build_grid(scenario);
    std::set<std::string> needs;
    for (const auto& row : grid.rows()) needs.insert(row.label);
    const aacplan::Cluster cluster = opt.exact ? aacplan::cover_exact(grid, needs)
                                               : aacplan::cover_greedy(grid, needs);
    write_file(opt.out_dir, "cluster.json",
               aacplan::cluster_to_json(grid, cluster).dump(2) + "\n");
  }
  if (scenario.checkpoint) {
    CheckpointArtifacts artifacts = run_checkpoint_sim(scenario, opt);
    write_file(opt.out_dir, "checkpoint_report.json", artifacts.report.dump(2) + "\n");
    write_file(opt.out_dir, "checkpoint_points.csv", artifacts.points_csv);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assistive-communication channel planning and simulation"};
  app.require_subcommand(1);

  Options opt;

  auto add_scenario = [&](CLI::App* cmd, bool required = true) {
    auto* arg = cmd->add_option("scenario", opt.scenario_path, "scenario file (JSON)");
    if (required) arg->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_dir, "output directory (default: stdout)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a scenario");
  add_scenario(validate);

  auto* plan = app.add_subcommand("plan", "plan a channel between two profiles");
  add_scenario(plan);
  add_common(plan);
  plan->add_option("--sender", opt.sender_id, "sender profile id")->required();
  plan->add_option("--receiver", opt.receiver_id, "receiver profile id")->required();
  bool reverse = false;
  plan->add_flag("--reverse", reverse, "plan the reply direction (receiver to sender)");

  auto* route = app.add_subcommand("route", "plan a hub route between two team members");
  add_scenario(route);
  add_common(route);
  route->add_option("--from", opt.from_id, "sending member id")->required();
  route->add_option("--to", opt.to_id, "receiving member id")->required();

  auto* matrix = app.add_subcommand("matrix", "all-pairs team reachability matrix");
  add_scenario(matrix);
  add_common(matrix);

  auto* elicit = app.add_subcommand("elicit", "select technologies covering needs");
  add_scenario(elicit);
  add_common(elicit);
  elicit->add_option("--needs", opt.needs, "comma-separated row labels (default: all)");
  elicit->add_flag("--exact", opt.exact, "exhaustive solver instead of greedy");

  auto* adapt_demo = app.add_subcommand("adapt-demo", "online estimator trajectory");
  add_common(adapt_demo);
  adapt_demo->add_option("--true-accuracy", opt.true_accuracy, "simulated accuracy")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  adapt_demo->add_option("--n", opt.n, "number of observations (default 1000)");
  adapt_demo->add_option("--seed", opt.seed, "random seed (default 0)");

  auto* simulate = app.add_subcommand("simulate-checkpoint",
                                      "Monte-Carlo run of the border pipeline");
  add_scenario(simulate);
  add_common(simulate);
  simulate->add_option("--n", opt.n, "trial count (default: scenario value)");
  simulate->add_option("--seed", opt.seed, "master seed (default: scenario value)");

  auto* report = app.add_subcommand("report", "write all applicable artifacts");
  add_scenario(report);
  report->add_option("--out", opt.out_dir, "output directory")->required();
  report->add_option("--n", opt.n, "checkpoint trial count override");
  report->add_option("--seed", opt.seed, "checkpoint seed override");
  report->add_flag("--exact", opt.exact, "exhaustive cover solver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* picked = app.get_subcommands().front();
  if (auto* o = picked->get_option_no_throw("--n")) opt.n_given = o->count() > 0;
  if (auto* o = picked->get_option_no_throw("--seed")) opt.seed_given = o->count() > 0;

  try {
    if (validate->parsed()) return run_validate(opt);
    if (plan->parsed()) return run_plan(opt, reverse);
    if (route->parsed()) return run_route(opt);
    if (matrix->parsed()) return run_matrix(opt);
    if (elicit->parsed()) return run_elicit(opt);
    if (adapt_demo->parsed()) return run_adapt_demo(opt);
    if (simulate->parsed()) return run_simulate_checkpoint(opt);
    if (report->parsed()) return run_report(opt);
  } catch (const aacplan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aacplan::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aacplan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
