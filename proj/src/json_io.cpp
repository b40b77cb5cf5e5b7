#include "csm/json_io.hpp"

#include <fstream>
#include <sstream>

namespace csm::json_io {

Json readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Integer toInteger(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return parseInteger(value.get<std::string>());
    if (value.is_number_integer()) return Integer(value.dump(), 10);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer (decimal string), got " + value.dump());
}

Rational toRational(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return parseRational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(Integer(value.dump(), 10));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational (\"p\" or \"p/q\"), got " + value.dump());
}

int toInt(const Json& value, const std::string& where) {
  Integer v = toInteger(value, where);
  if (!v.fits_sint_p()) throw InputError(where + ": integer out of range");
  return static_cast<int>(v.get_si());
}

Partition toPartition(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return parsePartition(value.get<std::string>());
    if (value.is_array()) {
      std::vector<int> parts;
      for (std::size_t i = 0; i < value.size(); ++i)
        parts.push_back(toInt(value[i], where + "[" + std::to_string(i) + "]"));
      return Partition(std::move(parts));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a partition, got " + value.dump());
}

const Json& member(const Json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) throw InputError(where + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

Json fromPartition(const Partition& p) { return Json(p.parts()); }

ModelPtr toModel(const Json& value, const std::string& where) {
  const Json& kind = member(value, "kind", where);
  if (!kind.is_string()) throw InputError(where + ".kind: expected a string");
  try {
    if (kind == "projective") return RingModel::projective(toInt(member(value, "n", where), where + ".n"));
    if (kind == "grassmannian")
      return RingModel::grassmannian(toInt(member(value, "k", where), where + ".k"),
                                     toInt(member(value, "n", where), where + ".n"));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ".kind: unknown model kind " + kind.dump());
}

Json fromModel(const RingModel& model) {
  Json out;
  if (model.kind() == ModelKind::ProjectiveSpace) {
    out["kind"] = "projective";
  } else {
    out["kind"] = "grassmannian";
    out["k"] = std::to_string(model.k());
  }
  out["n"] = std::to_string(model.n());
  return out;
}

Json fromClass(const GradedClass& x) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    if (x[i] != 0) terms.push_back(Json::array({x.model()->basisName(i), toDecimal(x[i])}));
  return terms;
}

Json denseCoefficients(const GradedClass& x) {
  Json out = Json::array();
  for (auto& c : x.coeffs()) out.push_back(toDecimal(c));
  return out;
}

GradedClass toClass(const ModelPtr& model, const Json& terms, const std::string& where) {
  if (!terms.is_array()) throw InputError(where + ": expected a list of [label, coefficient] pairs");
  GradedClass out(model);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string at = where + "[" + std::to_string(t) + "]";
    const Json& pair = terms[t];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
      throw InputError(at + ": expected [label, coefficient]");
    std::string label = pair[0].get<std::string>();
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < model->rank() && !idx; ++i)
      if (model->basisName(i) == label) idx = i;
    if (!idx) throw InputError(at + ": unknown basis label '" + label + "' for " + model->describe());
    out += GradedClass::basis(model, *idx, toInteger(pair[1], at));
  }
  return out;
}

}  // namespace csm::json_io
