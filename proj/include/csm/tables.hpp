#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csm/cells.hpp"
#include "csm/json_io.hpp"

namespace csm {

enum class TableKind { Csm, Ssm };

/// How a stored matrix maps onto a(w; u).
enum class Orientation {
  RowsAreCells,         ///< row u, column w
  ColumnsAreCells,      ///< row w, column u
  DualRowsAreCells,     ///< row u dual, column w dual
  DualColumnsAreCells,  ///< row w dual, column u dual
};

std::string orientationName(Orientation o);

/// Contents of a table file, before any orientation is applied.
///
/// File schema:
///   model:       {kind, k, n}
///   table:       "ssm" | "csm"            (default "ssm")
///   basis:       column labels, a list of partitions
///   cells:       row labels (optional; defaults to `basis`)
///   rows:        integer lists (decimal strings), one per cell, aligned with `basis`
///   orientation: "rows-are-cells" | "columns-are-cells" | "calibrate"
///                (default "rows-are-cells")
struct TableData {
  std::string name;
  TableKind kind = TableKind::Ssm;
  ModelPtr model;
  std::string orientation = "rows-are-cells";
  std::vector<Partition> basis;
  std::vector<Partition> cells;
  std::vector<std::vector<Integer>> rows;
  std::string provenance;
  json_io::Json source;
};

TableData parseTableData(const json_io::Json& document, const std::string& where);
TableData readTableFile(const std::string& path);

/// Builds the table for an explicit orientation, labelling basis positions by
/// `labels` (defaults to the stored basis). Rows come out in canonical order.
CellTable assembleTable(const TableData& data, Orientation orientation,
                        const std::optional<std::vector<Partition>>& labels = std::nullopt);

struct CalibrationCandidate {
  Orientation orientation;
  std::vector<Partition> labels;
  std::vector<std::string> failures;
};

struct Calibration {
  Orientation orientation;
  std::vector<Partition> labels;
  SsmTable ssm;
  std::vector<CalibrationCandidate> candidates;
};

/// Resolves the orientation of a square table, and any relabelling of the
/// stored index list that preserves box counts, by requiring: unit lower
/// triangularity in canonical order, a pure point row, sign alternation,
/// sum of SSM rows = [X], and degree 1 for every CSM row. Throws InputError
/// unless exactly one candidate survives.
Calibration calibrate(const TableData& data);

/// The resolved SSM table for any table file, honouring its orientation field.
SsmTable loadSsmTable(const TableData& data);

/// Built-in data: "paper" (Gr(2,5)) and "paper-31" (the (3,1) row in Gr(2,6)).
TableData builtinFixture(const std::string& name);
std::vector<std::string> builtinFixtureNames();
std::optional<std::string> defaultFixtureFor(int k, int n);

json_io::Json tableToJson(const CellTable& table);

}  // namespace csm
