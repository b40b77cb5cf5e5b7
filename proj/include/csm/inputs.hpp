#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csm/arrangement.hpp"
#include "csm/constructible.hpp"
#include "csm/json_io.hpp"

namespace csm {

/// Arrangement file: {"n": "2", "hyperplanes": [["1","0","0"], ["1/2","-1","0"], ...]}.
/// Entries are decimal integers or rationals "p/q"; rows are scaled to
/// primitive integer rows.
Arrangement parseArrangement(const json_io::Json& document, const std::string& where);
Arrangement readArrangementFile(const std::string& path);

/// Stratified space file.
///
///   strata:      [{name, dim, chi_c, closure_of: [names of strata whose
///                  closure contains this one]}]
///   euler_table: {Y: {s: value}} (optional). Row Y lists Eu_Y on strata in
///                the closure of Y; omitted rows and entries default to 1 on
///                the closure (nonsingular closures).
///   class_map:   {model: {kind, k, n}, classes: {Y: [dense coefficients]}}
///                (optional; when present every stratum needs a class)
///   functions:   {name: {stratum: value}} (optional; omitted strata are 0)
struct PosetFile {
  SpacePtr space;
  std::vector<std::pair<std::string, ConstructibleFn>> functions;

  const ConstructibleFn* function(const std::string& name) const;
};

PosetFile parsePoset(const json_io::Json& document, const std::string& where);
PosetFile readPosetFile(const std::string& path);

/// "Y:2,Z:3" -> [(index of Y, 2), (index of Z, 3)].
std::vector<std::pair<std::size_t, Integer>> parseBehrendSpec(const StratSpace& space,
                                                              const std::string& spec);

}  // namespace csm
