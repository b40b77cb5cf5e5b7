#pragma once

#include <string>
#include <vector>

#include "csm/partition.hpp"
#include "csm/ring.hpp"

namespace csm {

/// c(TP^n) cap [P^n] = sum_c binom(n+1, c) h^c.
GradedClass tangentChernClassProjective(const ModelPtr& projectiveModel);

/// Schubert expansion of c(T Gr(k,n)) cap [Gr(k,n)].
///
/// Writes the tangent bundle's Chern roots as x_i + y_j (x: roots of the dual
/// tautological subbundle, y: roots of the quotient), expands prod(1 + x_i + y_j)
/// through monomial and elementary symmetric functions of y, substitutes
/// e_r(y) -> h_r(x), and reads off Schur coefficients in x inside the rectangle.
GradedClass tangentChernClassGrassmannian(const ModelPtr& grassmannianModel);
GradedClass tangentChernClassGrassmannian(int k, int n);

/// c_*(1 of the cell C^j) pushed forward to P^n.
GradedClass csmCellProjective(int j, const ModelPtr& projectiveModel);
GradedClass csmCellProjective(int j, int n);

/// s_*(C^j, P^n) = c(TP^n)^{-1} cap c_*(1 of C^j).
GradedClass ssmCellProjective(int j, const ModelPtr& projectiveModel);
GradedClass ssmCellProjective(int j, int n);

/// Rows of characteristic classes of Schubert cells, one row per cell, each
/// row expanded in the model's basis. Full tables have one row per basis
/// element in canonical order; partial tables carry a subset of cells.
struct CellTable {
  ModelPtr model;
  std::vector<Partition> cells;
  std::vector<GradedClass> rows;

  bool isFull() const;
  const GradedClass& row(const Partition& cell) const;
  /// Square matrix entry a(w; u) = coefficient of [X(w)] in the row of u.
  const Integer& entry(std::size_t rowIndex, std::size_t column) const {
    return rows[rowIndex][column];
  }
  bool operator==(const CellTable& other) const;
};

/// Rows are c_*(1 of X(u)°).
struct CsmTable : CellTable {};
/// Rows are s_*(X(u)°, X) = sum_w a(w;u) [X(w)].
struct SsmTable : CellTable {};

/// Multiplies each row by c(TX)^{-1}; the inverse of csmFromSsm.
SsmTable ssmFromCsm(const CsmTable& csm, const GradedClass& tangentClass);
CsmTable csmFromSsm(const SsmTable& ssm, const GradedClass& tangentClass);
/// Same, with the tangent class computed from the table's model.
SsmTable ssmFromCsm(const CsmTable& csm);
CsmTable csmFromSsm(const SsmTable& ssm);

/// Tangent class of the table's ambient space (projective or Grassmannian).
GradedClass tangentClassOf(const ModelPtr& model);

/// Cell tables of P^n in the projective model.
CsmTable csmTableProjective(int n);
SsmTable ssmTableProjective(int n);

/// Cell tables of Gr(1,n) = P^{n-1} computed inside the Grassmannian model:
/// the closure of the cell (j) is X((j)) = P^j, so its CSM class is
/// (1 + sigma_1)^{j+1} cap [X((j))] minus the same expression for j - 1.
CsmTable csmTableGrassmannianLine(int n);

struct AlternationViolation {
  Partition cell;
  Partition cls;
  Integer coefficient;
};

/// Every a(w;u) with (-1)^{|u|-|w|} a(w;u) < 0.
std::vector<AlternationViolation> alternationCheck(const SsmTable& ssm);

/// Reindexes rows and columns by lambda -> dual of lambda in the ambient rectangle.
/// Partitions outside the rectangle cannot occur in a Grassmannian table, so the
/// truncation step of the stable comparison is the identity here.
CellTable frStableCompare(const CellTable& table);

/// Failure descriptions for each structural check; empty means pass.
std::vector<std::string> unitriangularityWitnesses(const CellTable& table);
std::vector<std::string> pointRowWitnesses(const CellTable& table);
/// The top-dimensional part of each row is exactly 1 * [X(u)].
std::vector<std::string> topTermWitnesses(const CellTable& table);
/// Sum over all cells of the rows equals `expected` (full tables only).
std::vector<std::string> partitionOfUnityWitnesses(const CellTable& table,
                                                   const GradedClass& expected);
/// Cells are affine spaces, so every CSM row has degree chi(C^l) = 1.
std::vector<std::string> cellEulerWitnesses(const CsmTable& csm);

}  // namespace csm
