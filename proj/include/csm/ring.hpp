#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csm/integer.hpp"
#include "csm/partition.hpp"

namespace csm {

enum class ModelKind { ProjectiveSpace, Grassmannian };

/// Chow ring A_*(X) of X = P^n or Gr(k,n), graded by homological dimension.
///
/// Projective space: basis h^c for 0 <= c <= n, i.e. the classes [P^{n-c}].
/// Grassmannian: basis [X(lambda)] for lambda in the k x (n-k) rectangle,
/// where X(lambda) is the Schubert variety of dimension |lambda|. In
/// cohomological notation [X(lambda)] is the Schubert class sigma of the dual
/// partition.
///
/// The basis is ordered by dimension ascending, and within a dimension by
/// descending lexicographic order of partition labels.
class RingModel {
 public:
  static std::shared_ptr<const RingModel> projective(int n);
  static std::shared_ptr<const RingModel> grassmannian(int k, int n);

  ModelKind kind() const { return kind_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int dimension() const { return dimension_; }
  /// Bounding rectangle of the labels: k x (n-k), or 1 x n for P^n.
  Rectangle rectangle() const {
    return kind_ == ModelKind::ProjectiveSpace ? Rectangle{1, n_} : Rectangle{k_, n_ - k_};
  }

  std::size_t rank() const { return labels_.size(); }
  /// Partition label of basis element i: (d) for [P^d], lambda for [X(lambda)].
  const Partition& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Partition>& labels() const { return labels_; }
  int dimOf(std::size_t i) const { return dims_[i]; }
  std::optional<std::size_t> indexOf(const Partition& label) const;

  std::size_t fundamentalIndex() const { return rank() - 1; }
  std::size_t pointIndex() const { return 0; }

  /// Display string of a basis element: "[P^2]", "[pt]" or "(3,1)".
  std::string basisName(std::size_t i) const;
  std::string describe() const;

  bool operator==(const RingModel& other) const {
    return kind_ == other.kind_ && k_ == other.k_ && n_ == other.n_;
  }

  /// Product of two basis elements, as (index, coefficient) pairs.
  const std::vector<std::pair<std::size_t, Integer>>& basisProduct(std::size_t i,
                                                                   std::size_t j) const;

 private:
  RingModel(ModelKind kind, int k, int n);

  ModelKind kind_;
  int k_;
  int n_;
  int dimension_;
  std::vector<Partition> labels_;
  std::vector<int> dims_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Integer>>>> products_;
};

using ModelPtr = std::shared_ptr<const RingModel>;

/// Element of A_*(X) with integer coefficients over the model's basis.
class GradedClass {
 public:
  explicit GradedClass(ModelPtr model);
  GradedClass(ModelPtr model, std::vector<Integer> coeffs);

  static GradedClass zero(ModelPtr model) { return GradedClass(std::move(model)); }
  /// The fundamental class [X], the multiplicative identity.
  static GradedClass unit(ModelPtr model);
  static GradedClass point(ModelPtr model);
  static GradedClass basis(ModelPtr model, std::size_t index, Integer coeff = 1);
  /// h^c, i.e. [P^{n-c}] (projective models only).
  static GradedClass hyperplanePower(ModelPtr model, int c);
  /// [X(lambda)] (Grassmannian models only).
  static GradedClass schubertVariety(ModelPtr model, const Partition& lambda);
  /// Cohomological Schubert class sigma_lambda = [X(lambda dual)].
  static GradedClass schubertClass(ModelPtr model, const Partition& lambda);

  const ModelPtr& model() const { return model_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer coefficientOf(const Partition& label) const;

  bool isZero() const;
  /// Homogeneous component of the given dimension.
  GradedClass component(int dim) const;
  /// Largest dimension carrying a nonzero coefficient, if any.
  std::optional<int> topDimension() const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass operator-() const;
  GradedClass scaled(const Integer& factor) const;

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend bool operator==(const GradedClass& a, const GradedClass& b);

  /// "(3,1) - 3*(2,1) + 22*()"; "0" for the zero class.
  std::string str() const;

 private:
  ModelPtr model_;
  std::vector<Integer> coeffs_;
};

/// Throws std::invalid_argument unless both classes live in the same model.
void requireSameModel(const GradedClass& a, const GradedClass& b);

GradedClass add(const GradedClass& x, const GradedClass& y);
GradedClass multiply(const GradedClass& x, const GradedClass& y);

/// Negates every homogeneous component of odd dimension.
GradedClass checkSigns(const GradedClass& x);

/// Inverse of a class of the form +-[X] + (nilpotent), by truncated
/// geometric series. Throws std::domain_error for any other leading coefficient.
GradedClass invertUnit(const GradedClass& u);

/// Nonzero with all coefficients nonnegative.
bool isEffective(const GradedClass& x);

/// Coefficient of the point class.
Integer degreeOf(const GradedClass& x);

}  // namespace csm
