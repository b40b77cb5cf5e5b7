#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csm/integer.hpp"
#include "csm/partition.hpp"

namespace csm {

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word. Results are memoized process-wide; lookups are
/// thread-safe.
Integer lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Expansion of s_lambda * s_mu in the Schur basis, optionally keeping only
/// partitions inside `bound`. Terms are listed in descending lexicographic order.
std::vector<std::pair<Partition, Integer>> lrProduct(const Partition& lambda, const Partition& mu,
                                                     std::optional<Rectangle> bound = std::nullopt);

}  // namespace csm
