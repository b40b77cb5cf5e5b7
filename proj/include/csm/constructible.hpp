#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csm/integer.hpp"
#include "csm/ring.hpp"

namespace csm {

struct Stratum {
  std::string name;
  int dim = 0;
  /// Compactly supported Euler characteristic.
  Integer chiC;
};

class StratSpace;
using SpacePtr = std::shared_ptr<const StratSpace>;

/// Local Euler obstructions: value(Y, s) = Eu_Y(s), where Y is the closure of
/// stratum Y. Unitriangular: Eu_Y(Y) = 1 and Eu_Y(s) = 0 unless s <= Y.
class EulerTable {
 public:
  /// Eu_Y = indicator of the closure of Y (all closures nonsingular).
  static EulerTable indicator(const StratSpace& space);
  /// Throws std::invalid_argument unless the values are unitriangular for `space`.
  EulerTable(const StratSpace& space, std::vector<std::vector<Integer>> values);

  std::size_t size() const { return values_.size(); }
  const Integer& operator()(std::size_t closure, std::size_t stratum) const {
    return values_[closure][stratum];
  }
  const std::vector<Integer>& row(std::size_t closure) const { return values_[closure]; }
  bool operator==(const EulerTable&) const = default;

 private:
  EulerTable() = default;
  std::vector<std::vector<Integer>> values_;
};

/// Chern-Mather classes c_Ma(Y) of the stratum closures in an ambient Chow ring.
struct ClassMap {
  ModelPtr ambient;
  std::vector<GradedClass> classes;
};

/// Finite stratified space: strata with dimensions and chi_c, the closure
/// partial order, local Euler obstructions and optional Chern-Mather data.
/// Immutable once created.
class StratSpace {
 public:
  /// `covers` lists pairs (s, t) meaning s lies in the closure of t; the
  /// order is their reflexive-transitive closure. Throws std::invalid_argument
  /// on cycles or when s < t with dim(s) >= dim(t).
  static SpacePtr create(std::vector<Stratum> strata,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                         std::optional<std::vector<std::vector<Integer>>> euler = std::nullopt,
                         std::optional<ClassMap> classMap = std::nullopt);

  std::size_t size() const { return strata_.size(); }
  const Stratum& stratum(std::size_t i) const { return strata_[i]; }
  const std::vector<Stratum>& strata() const { return strata_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// s lies in the closure of t (reflexive).
  bool leq(std::size_t s, std::size_t t) const { return order_[s][t]; }
  const EulerTable& euler() const { return *euler_; }
  const std::optional<ClassMap>& classMap() const { return classMap_; }
  /// Strata sorted by dimension, descending; ties by index.
  std::vector<std::size_t> byDescendingDimension() const;

 private:
  StratSpace() = default;
  std::vector<Stratum> strata_;
  std::vector<std::vector<bool>> order_;
  std::optional<EulerTable> euler_;
  std::optional<ClassMap> classMap_;
};

/// Integer-valued function, constant on each stratum.
class ConstructibleFn {
 public:
  explicit ConstructibleFn(SpacePtr space);
  ConstructibleFn(SpacePtr space, std::vector<Integer> values);

  /// Indicator of the (open) stratum s.
  static ConstructibleFn indicator(SpacePtr space, std::size_t s);
  /// Indicator of the closure of s.
  static ConstructibleFn indicatorOfClosure(SpacePtr space, std::size_t s);
  /// Eu_Y for the closure Y of s, read from the space's Euler table.
  static ConstructibleFn eulerObstruction(SpacePtr space, std::size_t s);

  const SpacePtr& space() const { return space_; }
  const std::vector<Integer>& values() const { return values_; }
  const Integer& operator[](std::size_t s) const { return values_[s]; }
  bool isZero() const;

  ConstructibleFn& operator+=(const ConstructibleFn& other);
  ConstructibleFn scaled(const Integer& c) const;
  friend ConstructibleFn operator+(ConstructibleFn a, const ConstructibleFn& b) { return a += b; }
  friend bool operator==(const ConstructibleFn& a, const ConstructibleFn& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  std::vector<Integer> values_;
};

/// CC(phi) = sum_Y a_Y [T*_Y X]; coefficient a_Y stored at the index of Y's open stratum.
struct CCCycle {
  SpacePtr space;
  std::vector<Integer> coeffs;

  bool isEmpty() const;
  bool operator==(const CCCycle&) const = default;
};

/// Solves phi = sum_Y a_Y (-1)^{dim Y} Eu_Y by back-substitution in
/// descending dimension.
CCCycle toCCCoefficients(const ConstructibleFn& phi, const EulerTable& eu);
CCCycle toCCCoefficients(const ConstructibleFn& phi);
/// sum_Y a_Y (-1)^{dim Y} Eu_Y.
ConstructibleFn fromCCCoefficients(const CCCycle& cc, const EulerTable& eu);

/// All a_Y >= 0 and at least one a_Y > 0; the empty cycle is not effective.
bool isEffectiveCC(const CCCycle& cc);

/// chi(Z, phi) = sum_s chi_c(s) phi(s).
Integer eulerCharacteristic(const ConstructibleFn& phi);

/// Product stratification: strata (s, s') indexed s * |B| + s', dimensions
/// added, chi_c multiplied, Eu_{Y x Y'} = Eu_Y (x) Eu_Y'. Class maps are dropped.
SpacePtr productSpace(const StratSpace& a, const StratSpace& b);

/// (phi (x) psi)(z, z') = phi(z) psi(z') on productSpace(phi.space, psi.space),
/// or on `product` when given (which must have been built from the same factors).
ConstructibleFn boxProduct(const ConstructibleFn& phi, const ConstructibleFn& psi,
                           SpacePtr product = nullptr);

/// Combinatorial model of a proper map with finite fibres: stratum s maps onto
/// stratum target(s) with deg(s) preimages over each point.
struct FiniteStratMap {
  SpacePtr source;
  SpacePtr target;
  std::vector<std::size_t> assignment;
  std::vector<Integer> degree;

  /// Throws std::invalid_argument unless assignments preserve dimension and
  /// closure order and all degrees are positive.
  void validate() const;
  /// chi_c(s) = deg(s) chi_c(f(s)) for every s.
  bool preservesEulerData() const;
};

/// f_* phi (t) = sum_{s -> t} deg(s) phi(s).
ConstructibleFn finitePushforward(const FiniteStratMap& f, const ConstructibleFn& phi);

/// Combinatorial model of a smooth morphism of relative dimension d: each
/// source stratum lies over one target stratum, with dimension shifted by d.
struct SmoothMapDatum {
  SpacePtr source;
  SpacePtr target;
  std::vector<std::size_t> assignment;
  int relativeDimension = 0;

  void validate() const;
  /// Source Euler table equals the pulled-back table, Eu_{f^-1 Y} = f^* Eu_Y.
  bool eulerCompatible() const;

  /// Projection Z x Y' -> Z for a product built by productSpace(Z, Y'), with Y'
  /// a single smooth stratum.
  static SmoothMapDatum productProjection(SpacePtr product, SpacePtr first, const StratSpace& second);
};

/// (-1)^d phi o f.
ConstructibleFn smoothPullback(const SmoothMapDatum& f, const ConstructibleFn& phi);

/// nu = sum_Y (-1)^{dim Y} mult(Y) Eu_Y over the given supports.
/// Throws std::invalid_argument on an empty list or a nonpositive multiplicity.
ConstructibleFn behrendFunction(SpacePtr space,
                                const std::vector<std::pair<std::size_t, Integer>>& components);

/// chi(Y, Eu_Y) for the closure of s.
Integer eulerCharacteristicOfObstruction(const StratSpace& space, std::size_t s);

/// c_*(phi) = sum_Y a_Y (-1)^{dim Y} c_Ma(Y). Throws std::logic_error without a class map.
GradedClass classOf(const ConstructibleFn& phi);
/// s_*(phi, X) = c(TX)^{-1} cap c_*(phi).
GradedClass ssmOf(const ConstructibleFn& phi, const GradedClass& tangentClass);
GradedClass signedClassOf(const ConstructibleFn& phi);
GradedClass signedSsmOf(const ConstructibleFn& phi, const GradedClass& tangentClass);

/// P^n stratified by the affine cells C^0 < C^1 < ... < C^n, with smooth
/// closures P^j and c_Ma(P^j) = c(TP^j) cap [P^j].
SpacePtr projectiveCellSpace(int n);

}  // namespace csm
