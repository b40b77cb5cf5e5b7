#include "csm/constructible.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csm {

namespace {

int signOfDim(int dim) { return dim % 2 == 0 ? 1 : -1; }

void requireSpace(const SpacePtr& space) {
  if (!space) throw std::invalid_argument("null stratified space");
}

void requireSameSpace(const SpacePtr& a, const SpacePtr& b) {
  if (a != b) throw std::invalid_argument("constructible functions live on different spaces");
}

}  // namespace

EulerTable EulerTable::indicator(const StratSpace& space) {
  EulerTable t;
  const std::size_t n = space.size();
  t.values_.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t s = 0; s < n; ++s)
      if (space.leq(s, y)) t.values_[y][s] = 1;
  return t;
}

EulerTable::EulerTable(const StratSpace& space, std::vector<std::vector<Integer>> values)
    : values_(std::move(values)) {
  const std::size_t n = space.size();
  if (values_.size() != n) throw std::invalid_argument("Euler table needs one row per stratum");
  for (std::size_t y = 0; y < n; ++y) {
    const std::string& name = space.stratum(y).name;
    if (values_[y].size() != n)
      throw std::invalid_argument("Euler table row '" + name + "' has the wrong length");
    if (values_[y][y] != 1)
      throw std::invalid_argument("Eu must be 1 on the open stratum of '" + name + "'");
    for (std::size_t s = 0; s < n; ++s)
      if (!space.leq(s, y) && values_[y][s] != 0)
        throw std::invalid_argument("Eu of the closure of '" + name + "' is nonzero on '" +
                                    space.stratum(s).name + "', which is outside the closure");
  }
}

SpacePtr StratSpace::create(std::vector<Stratum> strata,
                            const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                            std::optional<std::vector<std::vector<Integer>>> euler,
                            std::optional<ClassMap> classMap) {
  auto space = std::shared_ptr<StratSpace>(new StratSpace());
  const std::size_t n = strata.size();
  for (auto& s : strata)
    if (s.dim < 0) throw std::invalid_argument("stratum '" + s.name + "' has negative dimension");
  space->strata_ = std::move(strata);
  auto& order = space->order_;
  order.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) order[i][i] = true;
  for (auto [s, t] : covers) {
    if (s >= n || t >= n) throw std::invalid_argument("closure relation refers to a missing stratum");
    if (s == t) throw std::invalid_argument("a stratum cannot lie in its own boundary");
    order[s][t] = true;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (order[i][m])
        for (std::size_t j = 0; j < n; ++j)
          if (order[m][j]) order[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !order[i][j]) continue;
      if (order[j][i])
        throw std::invalid_argument("closure order has a cycle through '" + space->strata_[i].name + "'");
      if (space->strata_[i].dim >= space->strata_[j].dim)
        throw std::invalid_argument("'" + space->strata_[i].name + "' lies in the closure of '" +
                                    space->strata_[j].name + "' but is not of smaller dimension");
    }
  space->euler_ = euler ? EulerTable(*space, std::move(*euler)) : EulerTable::indicator(*space);
  if (classMap) {
    if (!classMap->ambient) throw std::invalid_argument("class map without an ambient model");
    if (classMap->classes.size() != n)
      throw std::invalid_argument("class map needs one class per stratum closure");
    for (auto& c : classMap->classes)
      if (!(*c.model() == *classMap->ambient))
        throw std::invalid_argument("class map entries must live in the ambient model");
    space->classMap_ = std::move(classMap);
  }
  return space;
}

std::optional<std::size_t> StratSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (strata_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> StratSpace::byDescendingDimension() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return strata_[a].dim > strata_[b].dim; });
  return order;
}

ConstructibleFn::ConstructibleFn(SpacePtr space) : space_(std::move(space)) {
  requireSpace(space_);
  values_.assign(space_->size(), Integer(0));
}

ConstructibleFn::ConstructibleFn(SpacePtr space, std::vector<Integer> values)
    : space_(std::move(space)), values_(std::move(values)) {
  requireSpace(space_);
  if (values_.size() != space_->size())
    throw std::invalid_argument("constructible function needs one value per stratum");
}

ConstructibleFn ConstructibleFn::indicator(SpacePtr space, std::size_t s) {
  ConstructibleFn f(std::move(space));
  f.values_.at(s) = 1;
  return f;
}

ConstructibleFn ConstructibleFn::indicatorOfClosure(SpacePtr space, std::size_t s) {
  ConstructibleFn f(std::move(space));
  for (std::size_t t = 0; t < f.values_.size(); ++t)
    if (f.space_->leq(t, s)) f.values_[t] = 1;
  return f;
}

ConstructibleFn ConstructibleFn::eulerObstruction(SpacePtr space, std::size_t s) {
  std::vector<Integer> row = space->euler().row(s);
  return ConstructibleFn(std::move(space), std::move(row));
}

bool ConstructibleFn::isZero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
}

ConstructibleFn& ConstructibleFn::operator+=(const ConstructibleFn& other) {
  requireSameSpace(space_, other.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ConstructibleFn ConstructibleFn::scaled(const Integer& c) const {
  ConstructibleFn out(*this);
  for (auto& v : out.values_) v *= c;
  return out;
}

bool CCCycle::isEmpty() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& v) { return v == 0; });
}

CCCycle toCCCoefficients(const ConstructibleFn& phi, const EulerTable& eu) {
  const StratSpace& space = *phi.space();
  if (eu.size() != space.size()) throw std::invalid_argument("Euler table does not match the space");
  CCCycle cc{phi.space(), std::vector<Integer>(space.size(), Integer(0))};
  // phi(s) = sum_{Y >= s} a_Y (-1)^{dim Y} Eu_Y(s), and Eu_s(s) = 1.
  for (std::size_t s : space.byDescendingDimension()) {
    Integer rest = phi[s];
    for (std::size_t y = 0; y < space.size(); ++y)
      if (y != s && space.leq(s, y)) rest -= signOfDim(space.stratum(y).dim) * cc.coeffs[y] * eu(y, s);
    cc.coeffs[s] = signOfDim(space.stratum(s).dim) * rest;
  }
  return cc;
}

CCCycle toCCCoefficients(const ConstructibleFn& phi) {
  return toCCCoefficients(phi, phi.space()->euler());
}

ConstructibleFn fromCCCoefficients(const CCCycle& cc, const EulerTable& eu) {
  const StratSpace& space = *cc.space;
  std::vector<Integer> values(space.size(), Integer(0));
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (cc.coeffs[y] == 0) continue;
    Integer weight = signOfDim(space.stratum(y).dim) * cc.coeffs[y];
    for (std::size_t s = 0; s < space.size(); ++s) values[s] += weight * eu(y, s);
  }
  return ConstructibleFn(cc.space, std::move(values));
}

bool isEffectiveCC(const CCCycle& cc) {
  bool positive = false;
  for (auto& a : cc.coeffs) {
    if (a < 0) return false;
    if (a > 0) positive = true;
  }
  return positive;
}

Integer eulerCharacteristic(const ConstructibleFn& phi) {
  Integer chi = 0;
  for (std::size_t s = 0; s < phi.values().size(); ++s) chi += phi.space()->stratum(s).chiC * phi[s];
  return chi;
}

SpacePtr productSpace(const StratSpace& a, const StratSpace& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      strata.push_back({a.stratum(i).name + " x " + b.stratum(j).name,
                        a.stratum(i).dim + b.stratum(j).dim, a.stratum(i).chiC * b.stratum(j).chiC});
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::vector<Integer>> euler(na * nb, std::vector<Integer>(na * nb, Integer(0)));
  for (std::size_t y = 0; y < na * nb; ++y)
    for (std::size_t s = 0; s < na * nb; ++s) {
      std::size_t yi = y / nb, yj = y % nb, si = s / nb, sj = s % nb;
      if (s != y && a.leq(si, yi) && b.leq(sj, yj)) covers.emplace_back(s, y);
      euler[y][s] = a.euler()(yi, si) * b.euler()(yj, sj);
    }
  return StratSpace::create(std::move(strata), covers, std::move(euler));
}

ConstructibleFn boxProduct(const ConstructibleFn& phi, const ConstructibleFn& psi, SpacePtr product) {
  const std::size_t na = phi.space()->size(), nb = psi.space()->size();
  if (!product) product = productSpace(*phi.space(), *psi.space());
  if (product->size() != na * nb) throw std::invalid_argument("product space has the wrong size");
  std::vector<Integer> values(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) values[i * nb + j] = phi[i] * psi[j];
  return ConstructibleFn(std::move(product), std::move(values));
}

void FiniteStratMap::validate() const {
  requireSpace(source);
  requireSpace(target);
  if (assignment.size() != source->size() || degree.size() != source->size())
    throw std::invalid_argument("finite map needs an image and a degree for every source stratum");
  for (std::size_t s = 0; s < assignment.size(); ++s) {
    if (assignment[s] >= target->size()) throw std::invalid_argument("finite map image out of range");
    if (source->stratum(s).dim != target->stratum(assignment[s]).dim)
      throw std::invalid_argument("finite map sends '" + source->stratum(s).name + "' to '" +
                                  target->stratum(assignment[s]).name + "' of a different dimension");
    if (degree[s] <= 0) throw std::invalid_argument("finite map degrees must be positive");
    for (std::size_t t = 0; t < assignment.size(); ++t)
      if (source->leq(s, t) && !target->leq(assignment[s], assignment[t]))
        throw std::invalid_argument("finite map does not respect the closure order");
  }
}

bool FiniteStratMap::preservesEulerData() const {
  for (std::size_t s = 0; s < assignment.size(); ++s)
    if (source->stratum(s).chiC != degree[s] * target->stratum(assignment[s]).chiC) return false;
  return true;
}

ConstructibleFn finitePushforward(const FiniteStratMap& f, const ConstructibleFn& phi) {
  f.validate();
  requireSameSpace(f.source, phi.space());
  std::vector<Integer> values(f.target->size(), Integer(0));
  for (std::size_t s = 0; s < f.assignment.size(); ++s) values[f.assignment[s]] += f.degree[s] * phi[s];
  return ConstructibleFn(f.target, std::move(values));
}

void SmoothMapDatum::validate() const {
  requireSpace(source);
  requireSpace(target);
  if (assignment.size() != source->size())
    throw std::invalid_argument("smooth map needs an image for every source stratum");
  for (std::size_t s = 0; s < assignment.size(); ++s) {
    if (assignment[s] >= target->size()) throw std::invalid_argument("smooth map image out of range");
    if (source->stratum(s).dim != target->stratum(assignment[s]).dim + relativeDimension)
      throw std::invalid_argument("stratum '" + source->stratum(s).name +
                                  "' does not have dimension shifted by " +
                                  std::to_string(relativeDimension));
    for (std::size_t t = 0; t < assignment.size(); ++t)
      if (source->leq(s, t) && !target->leq(assignment[s], assignment[t]))
        throw std::invalid_argument("smooth map does not respect the closure order");
  }
}

bool SmoothMapDatum::eulerCompatible() const {
  for (std::size_t y = 0; y < source->size(); ++y)
    for (std::size_t s = 0; s < source->size(); ++s) {
      Integer expected = source->leq(s, y) ? target->euler()(assignment[y], assignment[s]) : Integer(0);
      if (source->euler()(y, s) != expected) return false;
    }
  return true;
}

SmoothMapDatum SmoothMapDatum::productProjection(SpacePtr product, SpacePtr first,
                                                 const StratSpace& second) {
  if (second.size() != 1)
    throw std::invalid_argument("projection needs a smooth fibre consisting of one stratum");
  if (product->size() != first->size())
    throw std::invalid_argument("product space does not match its first factor");
  SmoothMapDatum f{std::move(product), std::move(first), {}, second.stratum(0).dim};
  f.assignment.resize(f.source->size());
  std::iota(f.assignment.begin(), f.assignment.end(), 0);
  f.validate();
  return f;
}

ConstructibleFn smoothPullback(const SmoothMapDatum& f, const ConstructibleFn& phi) {
  f.validate();
  requireSameSpace(f.target, phi.space());
  int sign = signOfDim(f.relativeDimension);
  std::vector<Integer> values(f.source->size());
  for (std::size_t s = 0; s < values.size(); ++s) values[s] = sign * phi[f.assignment[s]];
  return ConstructibleFn(f.source, std::move(values));
}

ConstructibleFn behrendFunction(SpacePtr space,
                                const std::vector<std::pair<std::size_t, Integer>>& components) {
  requireSpace(space);
  if (components.empty()) throw std::invalid_argument("Behrend function needs at least one support");
  ConstructibleFn nu(space);
  for (auto& [y, mult] : components) {
    if (y >= space->size()) throw std::invalid_argument("Behrend support out of range");
    if (mult <= 0)
      throw std::invalid_argument("multiplicity of '" + space->stratum(y).name + "' must be positive");
    nu += ConstructibleFn::eulerObstruction(space, y).scaled(signOfDim(space->stratum(y).dim) * mult);
  }
  return nu;
}

Integer eulerCharacteristicOfObstruction(const StratSpace& space, std::size_t s) {
  Integer chi = 0;
  for (std::size_t t = 0; t < space.size(); ++t) chi += space.stratum(t).chiC * space.euler()(s, t);
  return chi;
}

GradedClass classOf(const ConstructibleFn& phi) {
  const StratSpace& space = *phi.space();
  if (!space.classMap()) throw std::logic_error("space has no Chern-Mather class map");
  const ClassMap& map = *space.classMap();
  CCCycle cc = toCCCoefficients(phi);
  GradedClass out(map.ambient);
  for (std::size_t y = 0; y < space.size(); ++y)
    if (cc.coeffs[y] != 0)
      out += map.classes[y].scaled(signOfDim(space.stratum(y).dim) * cc.coeffs[y]);
  return out;
}

GradedClass ssmOf(const ConstructibleFn& phi, const GradedClass& tangentClass) {
  return invertUnit(tangentClass) * classOf(phi);
}

GradedClass signedClassOf(const ConstructibleFn& phi) { return checkSigns(classOf(phi)); }

GradedClass signedSsmOf(const ConstructibleFn& phi, const GradedClass& tangentClass) {
  return checkSigns(ssmOf(phi, tangentClass));
}

SpacePtr projectiveCellSpace(int n) {
  if (n < 0) throw std::invalid_argument("projective cell space needs n >= 0");
  auto model = RingModel::projective(n);
  std::vector<Stratum> strata;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  ClassMap map{model, {}};
  for (int j = 0; j <= n; ++j) {
    strata.push_back({"C^" + std::to_string(j), j, Integer(1)});
    if (j > 0) covers.emplace_back(j - 1, j);
    GradedClass closure(model);
    for (int c = 0; c <= j; ++c) closure += GradedClass::basis(model, j - c, binomial(j + 1, c));
    map.classes.push_back(std::move(closure));
  }
  return StratSpace::create(std::move(strata), covers, std::nullopt, std::move(map));
}

}  // namespace csm
