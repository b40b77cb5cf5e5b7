#include "csm/littlewood_richardson.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace csm {

namespace {

using Key = std::tuple<Partition, Partition, Partition>;

struct Memo {
  std::shared_mutex mutex;
  std::map<Key, Integer> values;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

/// Counts LR tableaux of shape nu/lambda and content mu by filling cells in
/// reverse reading order (rows top to bottom, each row right to left).
class TableauCounter {
 public:
  TableauCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), used_(mu.length() + 1, 0) {
    for (int r = 0; r < nu.length(); ++r)
      for (int c = nu[r] - 1; c >= lambda[r]; --c) cells_.emplace_back(r, c);
    filling_.assign(nu.length(), std::vector<int>(nu.length() ? nu[0] : 0, 0));
  }

  long count() { return place(0); }

 private:
  long place(std::size_t index) {
    if (index == cells_.size()) return 1;
    auto [r, c] = cells_[index];
    int hi = std::min(mu_.length(), r + 1);
    if (c + 1 < nu_[r]) hi = std::min(hi, filling_[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lambda_[r - 1]) lo = filling_[r - 1][c] + 1;
    long total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= mu_[v - 1]) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      filling_[r][c] = v;
      total += place(index + 1);
      --used_[v];
    }
    filling_[r][c] = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> used_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> filling_;
};

}  // namespace

Integer lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu)) return 0;
  Key key{lambda, mu, nu};
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.values.find(key); it != m.values.end()) return it->second;
  }
  Integer value = TableauCounter(lambda, mu, nu).count();
  std::unique_lock lock(m.mutex);
  m.values.emplace(std::move(key), value);
  return value;
}

std::vector<std::pair<Partition, Integer>> lrProduct(const Partition& lambda, const Partition& mu,
                                                     std::optional<Rectangle> bound) {
  int total = lambda.size() + mu.size();
  int maxPart = lambda[0] + mu[0];
  int maxLength = lambda.length() + mu.length();
  if (bound) {
    if (!lambda.fitsIn(*bound) || !mu.fitsIn(*bound)) return {};
    maxPart = std::min(maxPart, bound->cols);
    maxLength = std::min(maxLength, bound->rows);
  }
  std::vector<std::pair<Partition, Integer>> out;
  for (auto& nu : partitionsOf(total, maxPart, maxLength)) {
    if (!nu.contains(lambda) || !nu.contains(mu)) continue;
    Integer c = lrCoefficient(lambda, mu, nu);
    if (c != 0) out.emplace_back(std::move(nu), std::move(c));
  }
  return out;
}

}  // namespace csm
