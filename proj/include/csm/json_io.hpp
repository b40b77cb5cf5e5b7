#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "csm/integer.hpp"
#include "csm/partition.hpp"
#include "csm/ring.hpp"

namespace csm {

/// Malformed or inconsistent user input (CLI exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace json_io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
Json readFile(const std::string& path);

/// Integer given as a decimal string or a JSON integer.
Integer toInteger(const Json& value, const std::string& where);
Rational toRational(const Json& value, const std::string& where);
int toInt(const Json& value, const std::string& where);
/// Partition given as an array of parts, or a string such as "(3,1)".
Partition toPartition(const Json& value, const std::string& where);
const Json& member(const Json& object, const std::string& key, const std::string& where);

Json fromPartition(const Partition& p);

/// {"kind": "projective", "n": "3"} or {"kind": "grassmannian", "k": "2", "n": "5"}.
ModelPtr toModel(const Json& value, const std::string& where);
Json fromModel(const RingModel& model);

/// Nonzero terms in canonical basis order as [label, "coefficient"] pairs.
Json fromClass(const GradedClass& x);
/// Dense coefficient list in canonical basis order, as decimal strings.
Json denseCoefficients(const GradedClass& x);
/// Inverse of fromClass.
GradedClass toClass(const ModelPtr& model, const Json& terms, const std::string& where);

}  // namespace json_io
}  // namespace csm
