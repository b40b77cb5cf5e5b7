#pragma once

// Sparse multivariate integer polynomials, used internally for symmetric
// function computations.

#include <map>
#include <vector>

#include "csm/integer.hpp"
#include "csm/partition.hpp"

namespace csm::detail {

using Exponent = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Integer& c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Integer coefficient(const Exponent& e) const;

  void addTerm(const Exponent& e, const Integer& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial scaled(const Integer& c) const;

  /// Product with all terms of total degree > maxDegree discarded (maxDegree < 0: keep all).
  Polynomial times(const Polynomial& other, int maxDegree = -1) const;

 private:
  int nvars_;
  std::map<Exponent, Integer> terms_;
};

int totalDegree(const Exponent& e);

/// Complete homogeneous symmetric polynomial h_r(x_1..x_nvars).
Polynomial completeHomogeneous(int nvars, int r);

/// Schur coefficients of a symmetric polynomial: the coefficient of s_lambda is
/// the coefficient of x^(lambda + delta) in f times the Vandermonde product.
std::map<Partition, Integer> schurExpansion(const Polynomial& symmetric);

/// Expresses the monomial symmetric polynomial m_mu in `nvars` variables as a
/// polynomial in e_1..e_nvars (exponent vector indexed by r-1).
Polynomial monomialInElementary(const Partition& mu, int nvars);

}  // namespace csm::detail
