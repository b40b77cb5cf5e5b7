#include "csm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csm {

namespace {

void normalize(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

void enumerate(int remaining, int maxPart, int maxLength, std::vector<int>& current,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (maxLength == 0) return;
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    current.push_back(part);
    enumerate(remaining - part, part, maxLength - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(parts_); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fitsIn(Rectangle rect) const {
  return length() <= rect.rows && (parts_.empty() || parts_.front() <= rect.cols);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.parts_.size(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return {};
  for (int col = 0; col < parts_.front(); ++col) {
    int height = 0;
    while (height < length() && parts_[height] > col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition dualInRectangle(const Partition& lambda, Rectangle rect) {
  if (!lambda.fitsIn(rect))
    throw std::invalid_argument("partition " + lambda.str() + " does not fit in the " +
                                std::to_string(rect.rows) + "x" + std::to_string(rect.cols) +
                                " rectangle");
  std::vector<int> out(rect.rows);
  for (int i = 0; i < rect.rows; ++i) out[i] = rect.cols - lambda[rect.rows - 1 - i];
  return Partition(std::move(out));
}

std::vector<Partition> partitionsOf(int n, int maxPart, int maxLength) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  enumerate(n, maxPart, maxLength, current, out);
  return out;
}

std::vector<Partition> partitionsInRectangle(Rectangle rect) {
  std::vector<Partition> out;
  for (int n = 0; n <= rect.area(); ++n) {
    auto layer = partitionsOf(n, rect.cols, rect.rows);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Partition parsePartition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ') body += c;
  std::vector<int> parts;
  if (body.empty()) return {};
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed partition '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

}  // namespace csm
