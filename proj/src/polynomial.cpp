#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csm::detail {

Polynomial Polynomial::constant(int nvars, const Integer& c) {
  Polynomial p(nvars);
  p.addTerm(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.addTerm(e, 1);
  return p;
}

Integer Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::addTerm(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (auto& [e, c] : other.terms_) addTerm(e, c);
  return *this;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Polynomial Polynomial::times(const Polynomial& other, int maxDegree) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out(nvars_);
  Exponent e(nvars_);
  for (auto& [ea, ca] : terms_) {
    int da = totalDegree(ea);
    for (auto& [eb, cb] : other.terms_) {
      if (maxDegree >= 0 && da + totalDegree(eb) > maxDegree) continue;
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.addTerm(e, ca * cb);
    }
  }
  return out;
}

int totalDegree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial completeHomogeneous(int nvars, int r) {
  Polynomial out(nvars);
  if (r < 0) return out;
  if (nvars == 0) return r == 0 ? Polynomial::constant(0, 1) : out;
  // Exponent vectors of total degree r, via stars and bars.
  Exponent e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.addTerm(e, 1);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, r);
  return out;
}

std::map<Partition, Integer> schurExpansion(const Polynomial& symmetric) {
  const int k = symmetric.nvars();
  Polynomial vandermonde = Polynomial::constant(k, 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Polynomial factor = Polynomial::variable(k, i);
      factor += Polynomial::variable(k, j).scaled(-1);
      vandermonde = vandermonde.times(factor);
    }
  Polynomial alternant = symmetric.times(vandermonde);
  std::map<Partition, Integer> out;
  for (auto& [e, c] : alternant.terms()) {
    bool strictlyDecreasing = true;
    for (int i = 0; i + 1 < k; ++i)
      if (e[i] <= e[i + 1]) strictlyDecreasing = false;
    if (!strictlyDecreasing) continue;
    std::vector<int> parts(k);
    for (int i = 0; i < k; ++i) parts[i] = e[i] - (k - 1 - i);
    out.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

Polynomial monomialInElementary(const Partition& mu, int nvars) {
  Polynomial result(nvars);
  if (mu.length() > nvars) return result;

  std::vector<Polynomial> elementary;
  for (int r = 0; r <= nvars; ++r) {
    Polynomial er(nvars);
    Exponent e(nvars, 0);
    std::fill(e.begin(), e.begin() + r, 1);
    std::sort(e.begin(), e.end());
    do {
      er.addTerm(e, 1);
    } while (std::next_permutation(e.begin(), e.end()));
    elementary.push_back(std::move(er));
  }

  Polynomial f(nvars);
  Exponent e(nvars, 0);
  for (int i = 0; i < nvars; ++i) e[i] = mu[i];
  std::sort(e.begin(), e.end());
  do {
    f.addTerm(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));

  while (!f.isZero()) {
    // std::map orders exponents lexicographically, so the last key leads.
    auto lead = std::prev(f.terms().end());
    Exponent alpha = lead->first;
    Integer c = lead->second;
    Exponent beta(nvars, 0);
    Polynomial product = Polynomial::constant(nvars, 1);
    for (int r = 0; r < nvars; ++r) {
      beta[r] = alpha[r] - (r + 1 < nvars ? alpha[r + 1] : 0);
      for (int p = 0; p < beta[r]; ++p) product = product.times(elementary[r + 1]);
    }
    f += product.scaled(-c);
    result.addTerm(beta, c);
  }
  return result;
}

}  // namespace csm::detail
