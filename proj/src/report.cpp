#include "aacplan/report.hpp"

#include <charconv>
#include <sstream>

namespace aacplan {

using json = nlohmann::ordered_json;

std::string fmt_double(double value) {
  char buffer[32];
  auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

json plan_to_json(const ChannelPlan& plan, const Catalog& catalog) {
  json stages = json::array();
  for (const auto& id : plan.stages) {
    const Transformation& t = catalog.transformation(id);
    stages.push_back(json{{"id", t.id},
                          {"source", t.source},
                          {"target", t.target},
                          {"mode", std::string(to_string(t.mode))},
                          {"accuracy", t.accuracy},
                          {"latency_ms", t.latency_ms},
                          {"cost", t.cost}});
  }
  return json{{"source", plan.source},
              {"sink", plan.sink},
              {"stages", std::move(stages)},
              {"end_to_end_accuracy", plan.end_to_end_accuracy},
              {"total_latency_ms", plan.total_latency_ms},
              {"total_cost", plan.total_cost},
              {"weight", plan.weight}};
}

std::string plan_to_csv(const ChannelPlan& plan, const Catalog& catalog) {
  std::ostringstream out;
  out << "stage,id,source,target,mode,accuracy,latency_ms,cost\n";
  for (std::size_t i = 0; i < plan.stages.size(); ++i) {
    const Transformation& t = catalog.transformation(plan.stages[i]);
    out << i << ',' << t.id << ',' << t.source << ',' << t.target << ','
        << to_string(t.mode) << ',' << fmt_double(t.accuracy) << ','
        << fmt_double(t.latency_ms) << ',' << fmt_double(t.cost) << '\n';
  }
  return out.str();
}

json matrix_to_json(const ReachabilityMatrix& matrix) {
  json cells = json::array();
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i == j || !matrix.at(i, j)) continue;
      cells.push_back(json{{"from", matrix.ids()[i]},
                           {"to", matrix.ids()[j]},
                           {"accuracy", matrix.at(i, j)->accuracy},
                           {"stages", matrix.at(i, j)->stage_count}});
    }
  }
  return json{{"members", json(matrix.ids())}, {"routes", std::move(cells)}};
}

std::string matrix_to_csv(const ReachabilityMatrix& matrix) {
  std::ostringstream out;
  out << "from\\to";
  for (const auto& id : matrix.ids()) out << ',' << id;
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.ids()[i];
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out << ',';
      if (i != j && matrix.at(i, j)) out << fmt_double(matrix.at(i, j)->accuracy);
    }
    out << '\n';
  }
  return out.str();
}

json cluster_to_json(const JudgmentGrid& grid, const Cluster& cluster) {
  json cells = json::array();
  for (const auto& [row, col] : cluster.covered_cells) {
    cells.push_back(row + col);
  }
  json x = json::array();
  for (const TechSummary& s : marginal_x(grid, cluster)) {
    x.push_back(json{{"technology", s.technology},
                     {"name", grid.col(s.technology).name},
                     {"covered_rows", json(s.covered_rows)},
                     {"cost", s.cost},
                     {"cost_share", s.cost_share}});
  }
  json y = json::array();
  for (const NeedSummary& s : marginal_y(grid, cluster)) {
    y.push_back(json{{"row", s.row},
                     {"technologies", json(s.technologies)},
                     {"max_score", s.max_score}});
  }
  return json{{"technologies", json(cluster.technologies)},
              {"covered_cells", std::move(cells)},
              {"total_cost", cluster.total_cost},
              {"marginal_x", std::move(x)},
              {"marginal_y", std::move(y)}};
}

std::string cluster_to_csv(const JudgmentGrid& grid, const Cluster& cluster) {
  std::ostringstream out;
  out << "technology,name,cost,covered_rows\n";
  for (const TechSummary& s : marginal_x(grid, cluster)) {
    out << s.technology << ',' << grid.col(s.technology).name << ','
        << fmt_double(s.cost) << ',';
    for (std::size_t i = 0; i < s.covered_rows.size(); ++i) {
      if (i) out << ';';
      out << s.covered_rows[i];
    }
    out << '\n';
  }
  return out.str();
}

json simulation_to_json(const SimulationReport& report,
                        std::span<const SecurityPoint> pipeline) {
  json by_point = json::array();
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    by_point.push_back(json{{"index", pipeline[i].index},
                            {"name", std::string(to_string(pipeline[i].name))},
                            {"alarms", report.alarm_by_point[i]},
                            {"attempts", report.attempts_by_point[i]}});
  }
  return json{{"n", report.n},
              {"seed", report.seed},
              {"cleared", report.cleared},
              {"clear_rate", report.clear_rate},
              {"alarm_rate", report.alarm_rate},
              {"alarm_by_point", std::move(by_point)},
              {"mean_attempts", report.mean_attempts},
              {"mean_service_time_ms", report.mean_service_time_ms}};
}

std::string simulation_points_csv(const SimulationReport& report,
                                  std::span<const SecurityPoint> pipeline,
                                  const UserProfile& sender, const Catalog& catalog) {
  std::ostringstream out;
  out << "index,name,accuracy,attack_margin,alarms,attempts\n";
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    out << pipeline[i].index << ',' << to_string(pipeline[i].name) << ','
        << fmt_double(channel_accuracy(pipeline[i].plan, sender, catalog)) << ','
        << fmt_double(semantic_attack_margin(pipeline[i], sender, catalog)) << ','
        << report.alarm_by_point[i] << ',' << report.attempts_by_point[i] << '\n';
  }
  return out.str();
}

json topk_to_json() {
  json rows = json::array();
  for (const TopkRow& row : builtin_topk_table()) {
    rows.push_back(json{{"model", row.model},
                        {"dataset", row.dataset},
                        {"top1", row.top1},
                        {"top5", row.top5},
                        {"top10", row.top10}});
  }
  return rows;
}

std::string topk_to_csv() {
  std::ostringstream out;
  out << "model,dataset,top1,top5,top10\n";
  for (const TopkRow& row : builtin_topk_table()) {
    out << '"' << row.model << "\"," << row.dataset << ',' << fmt_double(row.top1)
        << ',' << fmt_double(row.top5) << ',' << fmt_double(row.top10) << '\n';
  }
  return out.str();
}

}  // namespace aacplan
