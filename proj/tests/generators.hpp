#pragma once

// Random inputs shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "csm/arrangement.hpp"
#include "csm/constructible.hpp"
#include "oracles.hpp"

namespace gen {

using csm::Integer;

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random stratified space with `size` strata of dimension <= 3. Each pair
/// of strata of different dimensions is related with probability 1/2. When
/// `randomEuler` is set the local Euler obstructions off the diagonal are
/// random in [-3, 3] on the closure; otherwise closures are nonsingular.
inline csm::SpacePtr randomSpace(std::mt19937_64& rng, std::size_t size, bool randomEuler) {
  std::vector<csm::Stratum> strata;
  for (std::size_t i = 0; i < size; ++i)
    strata.push_back({"s" + std::to_string(i), uniform(rng, 0, 3), Integer(uniform(rng, -2, 3))});
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t t = 0; t < size; ++t)
      if (strata[s].dim < strata[t].dim && uniform(rng, 0, 1) == 1) covers.emplace_back(s, t);
  auto bare = csm::StratSpace::create(strata, covers);
  if (!randomEuler) return bare;
  std::vector<std::vector<Integer>> euler(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t y = 0; y < size; ++y)
    for (std::size_t s = 0; s < size; ++s)
      if (s == y) euler[y][s] = 1;
      else if (bare->leq(s, y)) euler[y][s] = uniform(rng, -3, 3);
  return csm::StratSpace::create(strata, covers, euler);
}

inline csm::ConstructibleFn randomFunction(std::mt19937_64& rng, const csm::SpacePtr& space, int bound = 6) {
  std::vector<Integer> values;
  for (std::size_t s = 0; s < space->size(); ++s) values.emplace_back(uniform(rng, -bound, bound));
  return csm::ConstructibleFn(space, std::move(values));
}

/// Rational hyperplanes in P^n with small numerators and denominators;
/// zero and repeated (proportional) rows are redrawn.
inline csm::Arrangement randomArrangement(std::mt19937_64& rng, int n, std::size_t count) {
  std::vector<std::vector<csm::Rational>> rows;
  std::vector<std::vector<Integer>> seen;
  int attempts = 0;
  while (rows.size() < count && attempts++ < 1000) {
    std::vector<csm::Rational> row;
    for (int j = 0; j <= n; ++j) {
      // Sparse rows make non-generic intersections likely.
      int num = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, -3, 3);
      row.emplace_back(Integer(num), Integer(uniform(rng, 1, 3)));
      row.back().canonicalize();
    }
    auto prim = csm::primitiveRow(row);
    bool zero = true;
    for (auto& v : prim) zero = zero && v == 0;
    if (zero || std::find(seen.begin(), seen.end(), prim) != seen.end()) continue;
    seen.push_back(prim);
    rows.push_back(std::move(row));
  }
  return csm::Arrangement(n, rows);
}

}  // namespace gen
