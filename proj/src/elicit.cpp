#include "aacplan/elicit.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "aacplan/errors.hpp"

namespace aacplan {

JudgmentGrid JudgmentGrid::make(std::vector<Row> rows, std::vector<Col> cols,
                                const std::vector<Cell>& cells) {
  JudgmentGrid grid;
  grid.rows_ = std::move(rows);
  grid.cols_ = std::move(cols);

  std::map<std::string, std::size_t> row_at, col_at;
  for (std::size_t i = 0; i < grid.rows_.size(); ++i) {
    if (!row_at.emplace(grid.rows_[i].label, i).second) {
      throw DuplicateName("duplicate row label \"" + grid.rows_[i].label + "\"");
    }
  }
  for (std::size_t j = 0; j < grid.cols_.size(); ++j) {
    if (!col_at.emplace(grid.cols_[j].label, j).second) {
      throw DuplicateName("duplicate column label \"" + grid.cols_[j].label + "\"");
    }
    if (!(grid.cols_[j].cost > 0.0)) {
      throw InvalidDescriptor("cost of technology \"" + grid.cols_[j].label +
                              "\" must be > 0");
    }
  }

  grid.judgments_.assign(grid.rows_.size() * grid.cols_.size(), std::nullopt);
  std::vector<bool> seen(grid.judgments_.size(), false);
  for (const Cell& cell : cells) {
    auto r = row_at.find(cell.row);
    auto c = col_at.find(cell.col);
    if (r == row_at.end()) throw UnknownTrait("unknown row \"" + cell.row + "\"");
    if (c == col_at.end()) throw UnknownTrait("unknown column \"" + cell.col + "\"");
    const std::size_t at = r->second * grid.cols_.size() + c->second;
    if (seen[at]) {
      throw DuplicateName("cell (" + cell.row + "," + cell.col + ") judged twice");
    }
    seen[at] = true;
    if (cell.score && !(*cell.score > 0.0 && *cell.score <= 1.0)) {
      throw InvalidDescriptor("score of cell (" + cell.row + "," + cell.col +
                              ") outside (0,1]");
    }
    grid.judgments_[at] = cell.score;
  }
  return grid;
}

std::size_t JudgmentGrid::row_index(const std::string& label) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].label == label) return i;
  }
  throw UnknownTrait("unknown row \"" + label + "\"");
}

std::size_t JudgmentGrid::col_index(const std::string& label) const {
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].label == label) return j;
  }
  throw UnknownTrait("unknown column \"" + label + "\"");
}

bool JudgmentGrid::has_row(const std::string& label) const {
  return std::any_of(rows_.begin(), rows_.end(),
                     [&](const Row& r) { return r.label == label; });
}

bool JudgmentGrid::has_col(const std::string& label) const {
  return std::any_of(cols_.begin(), cols_.end(),
                     [&](const Col& c) { return c.label == label; });
}

const JudgmentGrid::Col& JudgmentGrid::col(const std::string& label) const {
  return cols_[col_index(label)];
}

const std::optional<double>& JudgmentGrid::judgment(const std::string& row,
                                                    const std::string& col) const {
  return judgments_[row_index(row) * cols_.size() + col_index(col)];
}

namespace {

struct Instance {
  std::vector<std::string> needed;            // needed row labels, grid order
  std::vector<std::uint32_t> col_masks;       // per column, bitmask over `needed`
  std::uint32_t full_mask = 0;
};

Instance build_instance(const JudgmentGrid& grid, const std::set<std::string>& needs) {
  for (const std::string& label : needs) {
    if (!grid.has_row(label)) throw UnknownTrait("unknown row \"" + label + "\"");
  }
  Instance inst;
  for (const auto& row : grid.rows()) {
    if (needs.contains(row.label)) inst.needed.push_back(row.label);
  }
  inst.col_masks.resize(grid.cols().size(), 0);
  for (std::size_t j = 0; j < grid.cols().size(); ++j) {
    for (std::size_t i = 0; i < inst.needed.size(); ++i) {
      if (grid.judgment(inst.needed[i], grid.cols()[j].label)) {
        inst.col_masks[j] |= std::uint32_t{1} << i;
      }
    }
  }
  if (!inst.needed.empty()) {
    inst.full_mask = (std::uint32_t{1} << inst.needed.size()) - 1;
  }
  for (std::size_t i = 0; i < inst.needed.size(); ++i) {
    bool coverable = false;
    for (std::uint32_t mask : inst.col_masks) {
      if (mask & (std::uint32_t{1} << i)) {
        coverable = true;
        break;
      }
    }
    if (!coverable) {
      throw Uncoverable(inst.needed[i], "no technology is recommended for row \"" +
                                            inst.needed[i] + "\"");
    }
  }
  return inst;
}

Cluster finish_cluster(const JudgmentGrid& grid, const Instance& inst,
                       std::vector<std::size_t> selected) {
  std::sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
    return grid.cols()[a].label < grid.cols()[b].label;
  });
  Cluster cluster;
  for (std::size_t j : selected) {
    cluster.technologies.push_back(grid.cols()[j].label);
    cluster.total_cost += grid.cols()[j].cost;
  }
  for (const std::string& row : inst.needed) {
    for (std::size_t j : selected) {
      if (grid.judgment(row, grid.cols()[j].label)) {
        cluster.covered_cells.emplace_back(row, grid.cols()[j].label);
      }
    }
  }
  std::sort(cluster.covered_cells.begin(), cluster.covered_cells.end());
  return cluster;
}

}  // namespace

Cluster cover_greedy(const JudgmentGrid& grid, const std::set<std::string>& needs) {
  const Instance inst = build_instance(grid, needs);

  std::vector<std::size_t> selected;
  std::uint32_t covered = 0;
  while (covered != inst.full_mask) {
    std::size_t best = grid.cols().size();
    int best_gain = 0;
    for (std::size_t j = 0; j < grid.cols().size(); ++j) {
      const int gain = std::popcount(inst.col_masks[j] & ~covered);
      if (gain == 0) continue;
      if (best == grid.cols().size()) {
        best = j;
        best_gain = gain;
        continue;
      }
      // Maximize gain/cost without dividing; costs are positive.
      const double lhs = static_cast<double>(gain) * grid.cols()[best].cost;
      const double rhs = static_cast<double>(best_gain) * grid.cols()[j].cost;
      if (lhs > rhs ||
          (lhs == rhs && (grid.cols()[j].cost < grid.cols()[best].cost ||
                          (grid.cols()[j].cost == grid.cols()[best].cost &&
                           grid.cols()[j].label < grid.cols()[best].label)))) {
        best = j;
        best_gain = gain;
      }
    }
    covered |= inst.col_masks[best];
    selected.push_back(best);
  }
  return finish_cluster(grid, inst, std::move(selected));
}

Cluster cover_exact(const JudgmentGrid& grid, const std::set<std::string>& needs) {
  if (grid.cols().size() > 20) {
    throw TooLarge("exact cover limited to 20 columns, grid has " +
                   std::to_string(grid.cols().size()));
  }
  const Instance inst = build_instance(grid, needs);
  if (inst.needed.empty()) return finish_cluster(grid, inst, {});

  const std::size_t ncols = grid.cols().size();

  // Columns sorted by label so a subset's label sequence comes out sorted.
  std::vector<std::size_t> by_label(ncols);
  for (std::size_t j = 0; j < ncols; ++j) by_label[j] = j;
  std::sort(by_label.begin(), by_label.end(), [&](std::size_t a, std::size_t b) {
    return grid.cols()[a].label < grid.cols()[b].label;
  });

  auto labels_of = [&](std::uint32_t subset) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < ncols; ++k) {
      if (subset & (std::uint32_t{1} << k)) labels.push_back(grid.cols()[by_label[k]].label);
    }
    return labels;
  };
  auto cost_of = [&](std::uint32_t subset) {
    double cost = 0.0;
    for (std::size_t k = 0; k < ncols; ++k) {
      if (subset & (std::uint32_t{1} << k)) cost += grid.cols()[by_label[k]].cost;
    }
    return cost;
  };

  bool found = false;
  std::uint32_t best_subset = 0;
  double best_cost = 0.0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << ncols); ++subset) {
    std::uint32_t covered = 0;
    for (std::size_t k = 0; k < ncols; ++k) {
      if (subset & (std::uint32_t{1} << k)) covered |= inst.col_masks[by_label[k]];
    }
    if (covered != inst.full_mask) continue;
    const double cost = cost_of(subset);
    if (!found || cost < best_cost ||
        (cost == best_cost &&
         (std::popcount(subset) < std::popcount(best_subset) ||
          (std::popcount(subset) == std::popcount(best_subset) &&
           labels_of(subset) < labels_of(best_subset))))) {
      found = true;
      best_subset = subset;
      best_cost = cost;
    }
  }
  // build_instance guarantees per-row coverability, so a cover exists (the
  // full column set at the latest).
  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < ncols; ++k) {
    if (best_subset & (std::uint32_t{1} << k)) selected.push_back(by_label[k]);
  }
  return finish_cluster(grid, inst, std::move(selected));
}

std::vector<TechSummary> marginal_x(const JudgmentGrid& grid, const Cluster& cluster) {
  std::vector<TechSummary> out;
  for (const std::string& tech : cluster.technologies) {
    TechSummary summary;
    summary.technology = tech;
    summary.cost = grid.col(tech).cost;
    summary.cost_share = cluster.total_cost > 0.0 ? summary.cost / cluster.total_cost : 0.0;
    for (const auto& [row, col] : cluster.covered_cells) {
      if (col == tech) summary.covered_rows.push_back(row);
    }
    out.push_back(std::move(summary));
  }
  return out;
}

std::vector<NeedSummary> marginal_y(const JudgmentGrid& grid, const Cluster& cluster) {
  std::vector<NeedSummary> out;
  for (const auto& row : grid.rows()) {
    NeedSummary summary;
    summary.row = row.label;
    for (const auto& [cell_row, col] : cluster.covered_cells) {
      if (cell_row != row.label) continue;
      summary.technologies.push_back(col);
      summary.max_score = std::max(summary.max_score, *grid.judgment(cell_row, col));
    }
    if (!summary.technologies.empty()) out.push_back(std::move(summary));
  }
  return out;
}

}  // namespace aacplan
