#include "csm/tables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fixtures_data.hpp"

namespace csm {

using json_io::Json;

std::string orientationName(Orientation o) {
  switch (o) {
    case Orientation::RowsAreCells: return "rows-are-cells";
    case Orientation::ColumnsAreCells: return "columns-are-cells";
    case Orientation::DualRowsAreCells: return "dual-rows-are-cells";
    case Orientation::DualColumnsAreCells: return "dual-columns-are-cells";
  }
  return "unknown";
}

namespace {

std::vector<Partition> partitionList(const Json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected a list of partitions");
  std::vector<Partition> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(json_io::toPartition(value[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void requireLabels(const std::vector<Partition>& labels, const RingModel& model,
                   const std::string& where) {
  std::set<Partition> seen;
  for (auto& l : labels) {
    if (!model.indexOf(l)) throw InputError(where + ": " + l.str() + " is not a basis label of " + model.describe());
    if (!seen.insert(l).second) throw InputError(where + ": duplicate label " + l.str());
  }
}

std::optional<Orientation> parseOrientation(const std::string& name) {
  for (auto o : {Orientation::RowsAreCells, Orientation::ColumnsAreCells,
                 Orientation::DualRowsAreCells, Orientation::DualColumnsAreCells})
    if (orientationName(o) == name) return o;
  return std::nullopt;
}

}  // namespace

TableData parseTableData(const Json& document, const std::string& where) {
  TableData data;
  data.source = document;
  data.model = json_io::toModel(json_io::member(document, "model", where), where + ".model");
  if (document.contains("name") && document["name"].is_string()) data.name = document["name"];
  if (document.contains("provenance") && document["provenance"].is_string())
    data.provenance = document["provenance"];
  if (document.contains("table")) {
    const Json& t = document["table"];
    if (t == "ssm") data.kind = TableKind::Ssm;
    else if (t == "csm") data.kind = TableKind::Csm;
    else throw InputError(where + ".table: expected \"ssm\" or \"csm\"");
  }
  if (document.contains("orientation")) {
    if (!document["orientation"].is_string()) throw InputError(where + ".orientation: expected a string");
    data.orientation = document["orientation"];
    if (data.orientation != "calibrate" && !parseOrientation(data.orientation))
      throw InputError(where + ".orientation: unknown value '" + data.orientation + "'");
  }
  data.basis = partitionList(json_io::member(document, "basis", where), where + ".basis");
  requireLabels(data.basis, *data.model, where + ".basis");
  data.cells = document.contains("cells") ? partitionList(document["cells"], where + ".cells")
                                          : data.basis;
  requireLabels(data.cells, *data.model, where + ".cells");

  const Json& rows = json_io::member(document, "rows", where);
  if (!rows.is_array()) throw InputError(where + ".rows: expected a list of rows");
  if (rows.size() != data.cells.size())
    throw InputError(where + ".rows: " + std::to_string(rows.size()) + " rows for " +
                     std::to_string(data.cells.size()) + " cells");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string at = where + ".rows[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != data.basis.size())
      throw InputError(at + ": expected " + std::to_string(data.basis.size()) + " entries");
    std::vector<Integer> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      row.push_back(json_io::toInteger(rows[r][c], at + "[" + std::to_string(c) + "]"));
    data.rows.push_back(std::move(row));
  }
  return data;
}

TableData readTableFile(const std::string& path) {
  return parseTableData(json_io::readFile(path), path);
}

CellTable assembleTable(const TableData& data, Orientation orientation,
                        const std::optional<std::vector<Partition>>& labels) {
  const auto& model = data.model;
  const Rectangle rect = model->rectangle();
  std::vector<Partition> columnLabels = labels.value_or(data.basis);
  if (columnLabels.size() != data.basis.size())
    throw std::invalid_argument("relabelling must cover every basis position");
  std::map<Partition, Partition> relabel;
  for (std::size_t i = 0; i < data.basis.size(); ++i) relabel.emplace(data.basis[i], columnLabels[i]);
  std::vector<Partition> rowLabels;
  for (auto& c : data.cells) rowLabels.push_back(relabel.count(c) ? relabel.at(c) : c);

  bool transposed = orientation == Orientation::ColumnsAreCells ||
                    orientation == Orientation::DualColumnsAreCells;
  bool dual = orientation == Orientation::DualRowsAreCells ||
              orientation == Orientation::DualColumnsAreCells;
  if (transposed && data.cells != data.basis)
    throw InputError("'" + data.name + "': columns-are-cells needs a square table with cells = basis");

  std::map<std::size_t, GradedClass> rows;
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    for (std::size_t c = 0; c < data.basis.size(); ++c) {
      Partition cell = transposed ? columnLabels[c] : rowLabels[r];
      Partition cls = transposed ? rowLabels[r] : columnLabels[c];
      if (dual) {
        cell = dualInRectangle(cell, rect);
        cls = dualInRectangle(cls, rect);
      }
      std::size_t cellIndex = *model->indexOf(cell);
      auto [it, inserted] = rows.try_emplace(cellIndex, model);
      it->second += GradedClass::basis(model, *model->indexOf(cls), data.rows[r][c]);
    }
  }
  CellTable out;
  out.model = model;
  for (auto& [idx, row] : rows) {
    out.cells.push_back(model->label(idx));
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

/// Box-count preserving relabellings of an index list.
std::vector<std::vector<Partition>> relabellings(const std::vector<Partition>& labels) {
  std::map<int, std::vector<std::size_t>> positionsBySize;
  for (std::size_t i = 0; i < labels.size(); ++i) positionsBySize[labels[i].size()].push_back(i);
  std::vector<std::vector<Partition>> out{labels};
  for (auto& [size, positions] : positionsBySize) {
    std::vector<Partition> group;
    for (auto p : positions) group.push_back(labels[p]);
    std::sort(group.begin(), group.end());
    std::vector<std::vector<Partition>> next;
    for (auto& base : out) {
      auto perm = group;
      do {
        auto candidate = base;
        for (std::size_t i = 0; i < positions.size(); ++i) candidate[positions[i]] = perm[i];
        next.push_back(std::move(candidate));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out = std::move(next);
  }
  // Put the stored reading first so that it is the reported label list.
  auto it = std::find(out.begin(), out.end(), labels);
  std::rotate(out.begin(), it, it + 1);
  return out;
}

}  // namespace

Calibration calibrate(const TableData& data) {
  if (data.cells != data.basis) throw InputError("'" + data.name + "': calibration needs a square table");
  GradedClass tangent = tangentClassOf(data.model);
  GradedClass fundamental = GradedClass::unit(data.model);

  Calibration result{};
  std::vector<std::size_t> survivors;
  for (auto& labels : relabellings(data.basis)) {
    for (auto o : {Orientation::RowsAreCells, Orientation::ColumnsAreCells,
                   Orientation::DualRowsAreCells, Orientation::DualColumnsAreCells}) {
      CalibrationCandidate cand{o, labels, {}};
      CellTable table = assembleTable(data, o, labels);
      SsmTable ssm;
      CsmTable csm;
      if (data.kind == TableKind::Ssm) {
        static_cast<CellTable&>(ssm) = table;
        csm = csmFromSsm(ssm, tangent);
      } else {
        static_cast<CellTable&>(csm) = table;
        ssm = ssmFromCsm(csm, tangent);
      }
      auto note = [&](const std::string& check, const std::vector<std::string>& w) {
        if (!w.empty()) cand.failures.push_back(check + ": " + w.front());
      };
      note("unitriangular", unitriangularityWitnesses(ssm));
      note("point row", pointRowWitnesses(ssm));
      auto alt = alternationCheck(ssm);
      if (!alt.empty())
        cand.failures.push_back("alternation: " + std::to_string(alt.size()) + " violations");
      note("partition of unity", partitionOfUnityWitnesses(ssm, fundamental));
      note("cell Euler characteristic", cellEulerWitnesses(csm));
      if (cand.failures.empty()) {
        survivors.push_back(result.candidates.size());
        result.ssm = ssm;
        result.orientation = o;
        result.labels = labels;
      }
      result.candidates.push_back(std::move(cand));
    }
  }
  if (survivors.size() != 1)
    throw InputError("'" + data.name + "': calibration left " + std::to_string(survivors.size()) +
                     " admissible orientations out of " + std::to_string(result.candidates.size()));
  return result;
}

SsmTable loadSsmTable(const TableData& data) {
  if (data.orientation == "calibrate") return calibrate(data).ssm;
  CellTable table = assembleTable(data, *parseOrientation(data.orientation));
  if (data.kind == TableKind::Ssm) {
    SsmTable out;
    static_cast<CellTable&>(out) = std::move(table);
    return out;
  }
  CsmTable csm;
  static_cast<CellTable&>(csm) = std::move(table);
  return ssmFromCsm(csm);
}

TableData builtinFixture(const std::string& name) {
  const char* text = nullptr;
  if (name == "paper") text = detail::kFixtureGr25;
  if (name == "paper-31") text = detail::kFixtureGr26Row31;
  if (!text) throw InputError("unknown built-in fixture '" + name + "'");
  return parseTableData(Json::parse(text), "fixture " + name);
}

std::vector<std::string> builtinFixtureNames() { return {"paper", "paper-31"}; }

std::optional<std::string> defaultFixtureFor(int k, int n) {
  if (k == 2 && n == 5) return "paper";
  if (k == 2 && n == 6) return "paper-31";
  return std::nullopt;
}

Json tableToJson(const CellTable& table) {
  Json out;
  out["model"] = json_io::fromModel(*table.model);
  Json basis = Json::array();
  for (auto& l : table.model->labels()) basis.push_back(json_io::fromPartition(l));
  out["basis"] = basis;
  Json cells = Json::array();
  for (auto& c : table.cells) cells.push_back(json_io::fromPartition(c));
  out["cells"] = cells;
  Json rows = Json::array();
  for (auto& r : table.rows) rows.push_back(json_io::denseCoefficients(r));
  out["rows"] = rows;
  return out;
}

}  // namespace csm
