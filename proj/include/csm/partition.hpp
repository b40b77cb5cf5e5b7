#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace csm {

/// k x m box; partitions with at most `rows` parts, each at most `cols`.
struct Rectangle {
  int rows = 0;
  int cols = 0;

  int area() const { return rows * cols; }
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Young diagram given by weakly decreasing positive parts. Trailing zeros
/// supplied at construction are dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// i-th part, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fitsIn(Rectangle rect) const;
  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  /// "(3,1)"; the empty partition prints as "()".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Complement of `lambda` in `rect`, rotated by 180 degrees.
/// Throws std::invalid_argument when lambda does not fit.
Partition dualInRectangle(const Partition& lambda, Rectangle rect);

/// All partitions in the rectangle: size ascending, and within one size
/// lexicographically descending (so (2) precedes (1,1)).
std::vector<Partition> partitionsInRectangle(Rectangle rect);

/// All partitions of `n` with parts bounded by `maxPart` and at most `maxLength` parts,
/// lexicographically descending.
std::vector<Partition> partitionsOf(int n, int maxPart, int maxLength);

/// Parses "(3,1)", "3,1", "()" or "" into a partition.
Partition parsePartition(const std::string& text);

}  // namespace csm
