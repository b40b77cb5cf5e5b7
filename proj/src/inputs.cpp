#include "csm/inputs.hpp"

#include <map>
#include <sstream>

namespace csm {

using json_io::Json;

Arrangement parseArrangement(const Json& document, const std::string& where) {
  int n = json_io::toInt(json_io::member(document, "n", where), where + ".n");
  const Json& rows = json_io::member(document, "hyperplanes", where);
  if (!rows.is_array()) throw InputError(where + ".hyperplanes: expected a list of rows");
  std::vector<std::vector<Rational>> hyperplanes;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string at = where + ".hyperplanes[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw InputError(at + ": expected a list of coefficients");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      row.push_back(json_io::toRational(rows[i][j], at + "[" + std::to_string(j) + "]"));
    hyperplanes.push_back(std::move(row));
  }
  try {
    return Arrangement(n, hyperplanes);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

Arrangement readArrangementFile(const std::string& path) {
  return parseArrangement(json_io::readFile(path), path);
}

const ConstructibleFn* PosetFile::function(const std::string& name) const {
  for (auto& [n, f] : functions)
    if (n == name) return &f;
  return nullptr;
}

namespace {

std::size_t strataIndex(const std::map<std::string, std::size_t>& names, const std::string& name,
                        const std::string& where) {
  auto it = names.find(name);
  if (it == names.end()) throw InputError(where + ": unknown stratum '" + name + "'");
  return it->second;
}

}  // namespace

PosetFile parsePoset(const Json& document, const std::string& where) {
  const Json& strataJson = json_io::member(document, "strata", where);
  if (!strataJson.is_array() || strataJson.empty())
    throw InputError(where + ".strata: expected a nonempty list");
  std::vector<Stratum> strata;
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < strataJson.size(); ++i) {
    std::string at = where + ".strata[" + std::to_string(i) + "]";
    const Json& s = strataJson[i];
    const Json& name = json_io::member(s, "name", at);
    if (!name.is_string()) throw InputError(at + ".name: expected a string");
    Stratum st{name.get<std::string>(), json_io::toInt(json_io::member(s, "dim", at), at + ".dim"),
               json_io::toInteger(json_io::member(s, "chi_c", at), at + ".chi_c")};
    if (!names.emplace(st.name, i).second) throw InputError(at + ": duplicate stratum name '" + st.name + "'");
    strata.push_back(std::move(st));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < strataJson.size(); ++i) {
    std::string at = where + ".strata[" + std::to_string(i) + "].closure_of";
    if (!strataJson[i].contains("closure_of")) continue;
    const Json& list = strataJson[i]["closure_of"];
    if (!list.is_array()) throw InputError(at + ": expected a list of names");
    for (auto& t : list) {
      if (!t.is_string()) throw InputError(at + ": expected stratum names");
      covers.emplace_back(i, strataIndex(names, t.get<std::string>(), at));
    }
  }

  // Validate the order first so that Euler defaults can use it.
  SpacePtr bare;
  try {
    bare = StratSpace::create(strata, covers);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  const std::size_t n = strata.size();
  std::vector<std::vector<Integer>> euler = [&] {
    std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t s = 0; s < n; ++s)
        if (bare->leq(s, y)) out[y][s] = 1;
    return out;
  }();
  if (document.contains("euler_table")) {
    const Json& table = document["euler_table"];
    if (!table.is_object()) throw InputError(where + ".euler_table: expected an object");
    for (auto& [yName, row] : table.items()) {
      std::string at = where + ".euler_table." + yName;
      std::size_t y = strataIndex(names, yName, at);
      if (!row.is_object()) throw InputError(at + ": expected an object");
      for (auto& [sName, v] : row.items())
        euler[y][strataIndex(names, sName, at)] = json_io::toInteger(v, at + "." + sName);
    }
  }

  std::optional<ClassMap> classMap;
  if (document.contains("class_map")) {
    std::string at = where + ".class_map";
    const Json& cm = document["class_map"];
    ClassMap map{json_io::toModel(json_io::member(cm, "model", at), at + ".model"), {}};
    const Json& classes = json_io::member(cm, "classes", at);
    for (std::size_t y = 0; y < n; ++y) {
      const std::string& yName = strata[y].name;
      if (!classes.contains(yName)) throw InputError(at + ".classes: missing class for '" + yName + "'");
      const Json& list = classes[yName];
      if (!list.is_array() || list.size() != map.ambient->rank())
        throw InputError(at + ".classes." + yName + ": expected " +
                         std::to_string(map.ambient->rank()) + " coefficients");
      std::vector<Integer> coeffs;
      for (std::size_t i = 0; i < list.size(); ++i)
        coeffs.push_back(json_io::toInteger(list[i], at + ".classes." + yName));
      map.classes.emplace_back(map.ambient, std::move(coeffs));
    }
    classMap = std::move(map);
  }

  PosetFile out;
  try {
    out.space = StratSpace::create(std::move(strata), covers, std::move(euler), std::move(classMap));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }

  if (document.contains("functions")) {
    const Json& fns = document["functions"];
    if (!fns.is_object()) throw InputError(where + ".functions: expected an object");
    for (auto& [fname, values] : fns.items()) {
      std::string at = where + ".functions." + fname;
      if (!values.is_object()) throw InputError(at + ": expected an object mapping strata to values");
      std::vector<Integer> v(n, Integer(0));
      for (auto& [sName, val] : values.items())
        v[strataIndex(names, sName, at)] = json_io::toInteger(val, at + "." + sName);
      out.functions.emplace_back(fname, ConstructibleFn(out.space, std::move(v)));
    }
  }
  return out;
}

PosetFile readPosetFile(const std::string& path) { return parsePoset(json_io::readFile(path), path); }

std::vector<std::pair<std::size_t, Integer>> parseBehrendSpec(const StratSpace& space,
                                                              const std::string& spec) {
  std::vector<std::pair<std::size_t, Integer>> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw InputError("behrend spec item '" + item + "' needs NAME:MULT");
    std::string name = item.substr(0, colon);
    auto idx = space.find(name);
    if (!idx) throw InputError("behrend spec: unknown stratum '" + name + "'");
    Integer mult;
    try {
      mult = parseInteger(item.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("behrend spec: ") + e.what());
    }
    if (mult <= 0) throw InputError("behrend spec: multiplicity of '" + name + "' must be positive");
    out.emplace_back(*idx, mult);
  }
  if (out.empty()) throw InputError("behrend spec is empty");
  return out;
}

}  // namespace csm
