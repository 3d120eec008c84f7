#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aacplan {

/// Expert-elicitation grid: rows are disability categories (letter labels),
/// columns are assistive technologies (number labels) with a cost. Every
/// (row, col) cell holds exactly one judgment: a recommendation score in
/// (0,1] or not-applicable.
class JudgmentGrid {
 public:
  struct Row {
    std::string label;
    std::string name;

    bool operator==(const Row&) const = default;
  };
  struct Col {
    std::string label;
    std::string name;
    double cost = 1.0;

    bool operator==(const Col&) const = default;
  };
  struct Cell {
    std::string row;
    std::string col;
    std::optional<double> score;  // nullopt = not applicable

    bool operator==(const Cell&) const = default;
  };

  /// Validating factory. Unlisted cells default to not-applicable; duplicate
  /// cells, unknown labels, non-positive costs and out-of-range scores are
  /// rejected (InvalidDescriptor / DuplicateName / UnknownTrait).
  static JudgmentGrid make(std::vector<Row> rows, std::vector<Col> cols,
                           const std::vector<Cell>& cells);

  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<Col>& cols() const { return cols_; }

  bool has_row(const std::string& label) const;
  bool has_col(const std::string& label) const;
  const Col& col(const std::string& label) const;

  /// Recommendation score of (row, col), or nullopt if not applicable.
  const std::optional<double>& judgment(const std::string& row,
                                        const std::string& col) const;

  bool operator==(const JudgmentGrid&) const = default;

 private:
  std::size_t row_index(const std::string& label) const;
  std::size_t col_index(const std::string& label) const;

  std::vector<Row> rows_;
  std::vector<Col> cols_;
  std::vector<std::optional<double>> judgments_;  // row-major
};

/// A selected technology set covering a set of needed disability rows.
struct Cluster {
  std::vector<std::string> technologies;  // column labels, sorted
  std::vector<std::pair<std::string, std::string>> covered_cells;  // (row, col), sorted
  double total_cost = 0.0;

  bool operator==(const Cluster&) const = default;
};

/// Greedy weighted set cover: repeatedly selects the technology maximizing
/// newly-covered-rows per cost (ties: lower cost, then smaller label) until
/// every needed row is covered. Throws Uncoverable naming the first row no
/// technology recommends.
Cluster cover_greedy(const JudgmentGrid& grid, const std::set<std::string>& needs);

/// Exhaustive minimum-cost cover over all column subsets (ties: fewer
/// columns, then lexicographically smallest label sequence). Limited to 20
/// columns; throws TooLarge beyond that, Uncoverable as above.
Cluster cover_exact(const JudgmentGrid& grid, const std::set<std::string>& needs);

struct TechSummary {
  std::string technology;
  std::vector<std::string> covered_rows;
  double cost = 0.0;
  double cost_share = 0.0;  // fraction of the cluster's total cost
};

struct NeedSummary {
  std::string row;
  std::vector<std::string> technologies;
  double max_score = 0.0;
};

/// Per-technology summary of a cluster (marginal conclusion over columns).
std::vector<TechSummary> marginal_x(const JudgmentGrid& grid, const Cluster& cluster);

/// Per-disability summary of a cluster (marginal conclusion over rows).
std::vector<NeedSummary> marginal_y(const JudgmentGrid& grid, const Cluster& cluster);

}  // namespace aacplan
