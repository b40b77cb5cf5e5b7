#pragma once

#include <string>
#include <vector>

#include "csm/integer.hpp"
#include "csm/ring.hpp"

namespace csm {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Projective hyperplane arrangement in P^n; hyperplane i is the zero set of
/// sum_j row_i[j] x_j. Rows are stored primitive, with positive leading entry.
class Arrangement {
 public:
  /// Throws std::invalid_argument on wrong row length, a zero row, or two
  /// proportional rows.
  Arrangement(int n, const std::vector<std::vector<Rational>>& hyperplanes);
  Arrangement(int n, const IntegerMatrix& hyperplanes);

  int n() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const IntegerMatrix& hyperplanes() const { return rows_; }

  static Arrangement boolean(int n);

 private:
  int n_;
  IntegerMatrix rows_;
};

/// Scales a rational row to a primitive integer row with positive leading entry.
std::vector<Integer> primitiveRow(const std::vector<Rational>& row);

/// Reduced row echelon form of the row space, each row rescaled to a primitive
/// integer vector with positive leading entry; zero rows dropped. Two matrices
/// have equal canonical forms iff they have the same row space.
IntegerMatrix canonicalRowSpace(const IntegerMatrix& rows);

std::size_t matrixRank(const IntegerMatrix& rows);

/// One flat of the central arrangement in C^{n+1}: a linear subspace, given by
/// the canonical form of its defining equations.
struct Flat {
  IntegerMatrix equations;
  std::size_t codim = 0;
  /// Indices of the hyperplanes containing the flat, ascending.
  std::vector<std::size_t> hyperplanes;
  /// mu(0, flat).
  Integer mobius;
};

/// Intersection lattice ordered by reverse inclusion; element 0 is the whole space.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& a);

  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  /// flat y <= flat z, i.e. y contains z.
  bool leq(std::size_t y, std::size_t z) const;
  int ambientDimension() const { return ambient_; }

 private:
  int ambient_;
  std::vector<Flat> flats_;
};

/// Coefficients b_0, b_1, ... of a polynomial in t.
using PoincarePolynomial = std::vector<Integer>;

/// sum_z mu(0, z) (-t)^codim(z), unchecked.
PoincarePolynomial mobiusPoincare(const IntersectionLattice& lattice);
/// Nonnegative coefficients and constant term 1.
bool isValidPoincare(const PoincarePolynomial& p);

/// pi(t) = sum_z mu(0, z) (-t)^codim(z). Throws std::logic_error if the result
/// has a negative coefficient or constant term other than 1.
PoincarePolynomial poincarePolynomial(const IntersectionLattice& lattice);

std::string polynomialString(const PoincarePolynomial& p, const std::string& var = "t");

/// c_SM(U) = pi(-h/(1+h)) (1+h)^{n+1} cap [P^n] for the complement U.
GradedClass csmComplement(const Arrangement& a);
GradedClass csmComplement(const Arrangement& a, const PoincarePolynomial& pi);
/// (-1)^{dim U} signed s_SM(U, P^n) = pi(h/(1-h)) cap [P^n].
GradedClass ssmSignedComplement(const Arrangement& a);
GradedClass ssmSignedComplement(const Arrangement& a, const PoincarePolynomial& pi);

struct ArrangementReport {
  PoincarePolynomial poincare;
  GradedClass csm;
  GradedClass ssmSigned;
  bool effective = false;
  bool poincareValid = false;
  Integer eulerCharacteristic;
  std::size_t latticeSize = 0;
};

ArrangementReport effectivityReport(const Arrangement& a);

}  // namespace csm
