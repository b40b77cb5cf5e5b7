#include "csm/ring.hpp"

#include <sstream>
#include <stdexcept>

#include "csm/littlewood_richardson.hpp"

namespace csm {

RingModel::RingModel(ModelKind kind, int k, int n) : kind_(kind), k_(k), n_(n) {
  if (kind == ModelKind::ProjectiveSpace) {
    if (n < 0) throw std::invalid_argument("projective space needs n >= 0");
    dimension_ = n;
    for (int d = 0; d <= n; ++d) {
      labels_.push_back(d == 0 ? Partition{} : Partition{d});
      dims_.push_back(d);
    }
  } else {
    if (k < 1 || k >= n) throw std::invalid_argument("Gr(k,n) needs 1 <= k < n");
    dimension_ = k * (n - k);
    labels_ = partitionsInRectangle(rectangle());
    for (auto& l : labels_) dims_.push_back(l.size());
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);

  const std::size_t r = rank();
  products_.assign(r, std::vector<std::vector<std::pair<std::size_t, Integer>>>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      int dim = dims_[i] + dims_[j] - dimension_;
      if (dim < 0) continue;
      auto& out = products_[i][j];
      if (kind == ModelKind::ProjectiveSpace) {
        out.emplace_back(static_cast<std::size_t>(dim), Integer(1));
        continue;
      }
      if (j < i) {
        out = products_[j][i];
        continue;
      }
      Rectangle rect = rectangle();
      for (auto& [nu, c] :
           lrProduct(dualInRectangle(labels_[i], rect), dualInRectangle(labels_[j], rect), rect))
        out.emplace_back(index_.at(dualInRectangle(nu, rect)), c);
    }
  }
}

std::shared_ptr<const RingModel> RingModel::projective(int n) {
  return std::shared_ptr<const RingModel>(new RingModel(ModelKind::ProjectiveSpace, 0, n));
}

std::shared_ptr<const RingModel> RingModel::grassmannian(int k, int n) {
  return std::shared_ptr<const RingModel>(new RingModel(ModelKind::Grassmannian, k, n));
}

std::optional<std::size_t> RingModel::indexOf(const Partition& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string RingModel::basisName(std::size_t i) const {
  if (kind_ == ModelKind::Grassmannian) return labels_[i].str();
  if (dims_[i] == 0) return "[pt]";
  return "[P^" + std::to_string(dims_[i]) + "]";
}

std::string RingModel::describe() const {
  if (kind_ == ModelKind::ProjectiveSpace) return "P^" + std::to_string(n_);
  return "Gr(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
}

const std::vector<std::pair<std::size_t, Integer>>& RingModel::basisProduct(std::size_t i,
                                                                            std::size_t j) const {
  return products_.at(i).at(j);
}

GradedClass::GradedClass(ModelPtr model) : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("null ring model");
  coeffs_.assign(model_->rank(), Integer(0));
}

GradedClass::GradedClass(ModelPtr model, std::vector<Integer> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
  if (!model_) throw std::invalid_argument("null ring model");
  if (coeffs_.size() != model_->rank())
    throw std::invalid_argument("coefficient vector has " + std::to_string(coeffs_.size()) +
                                " entries, model " + model_->describe() + " has rank " +
                                std::to_string(model_->rank()));
}

GradedClass GradedClass::unit(ModelPtr model) {
  auto idx = model->fundamentalIndex();
  return basis(std::move(model), idx);
}

GradedClass GradedClass::point(ModelPtr model) { return basis(std::move(model), 0); }

GradedClass GradedClass::basis(ModelPtr model, std::size_t index, Integer coeff) {
  GradedClass out(std::move(model));
  out.coeffs_.at(index) = std::move(coeff);
  return out;
}

GradedClass GradedClass::hyperplanePower(ModelPtr model, int c) {
  if (model->kind() != ModelKind::ProjectiveSpace)
    throw std::invalid_argument("hyperplane powers need a projective model");
  if (c < 0) throw std::invalid_argument("negative power");
  if (c > model->n()) return zero(std::move(model));
  auto idx = static_cast<std::size_t>(model->n() - c);
  return basis(std::move(model), idx);
}

GradedClass GradedClass::schubertVariety(ModelPtr model, const Partition& lambda) {
  auto idx = model->kind() == ModelKind::Grassmannian ? model->indexOf(lambda) : std::nullopt;
  if (!idx)
    throw std::invalid_argument(lambda.str() + " is not a Schubert label of " + model->describe());
  return basis(std::move(model), *idx);
}

GradedClass GradedClass::schubertClass(ModelPtr model, const Partition& lambda) {
  if (model->kind() != ModelKind::Grassmannian)
    throw std::invalid_argument("Schubert classes need a Grassmannian model");
  if (!lambda.fitsIn(model->rectangle())) return zero(std::move(model));
  auto dual = dualInRectangle(lambda, model->rectangle());
  return schubertVariety(std::move(model), dual);
}

Integer GradedClass::coefficientOf(const Partition& label) const {
  auto idx = model_->indexOf(label);
  return idx ? coeffs_[*idx] : Integer(0);
}

bool GradedClass::isZero() const {
  for (auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

GradedClass GradedClass::component(int dim) const {
  GradedClass out(model_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (model_->dimOf(i) == dim) out.coeffs_[i] = coeffs_[i];
  return out;
}

std::optional<int> GradedClass::topDimension() const {
  std::optional<int> top;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && (!top || model_->dimOf(i) > *top)) top = model_->dimOf(i);
  return top;
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  requireSameModel(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  requireSameModel(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GradedClass GradedClass::operator-() const { return scaled(-1); }

GradedClass GradedClass::scaled(const Integer& factor) const {
  GradedClass out(*this);
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  requireSameModel(a, b);
  GradedClass out(a.model_);
  const auto& model = *a.model_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      Integer ab = a.coeffs_[i] * b.coeffs_[j];
      for (auto& [idx, c] : model.basisProduct(i, j)) out.coeffs_[idx] += ab * c;
    }
  }
  return out;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return *a.model_ == *b.model_ && a.coeffs_ == b.coeffs_;
}

std::string GradedClass::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1) out << mag.get_str() << "*";
    out << model_->basisName(i);
    first = false;
  }
  return first ? "0" : out.str();
}

void requireSameModel(const GradedClass& a, const GradedClass& b) {
  if (!(*a.model() == *b.model()))
    throw std::invalid_argument("model mismatch: " + a.model()->describe() + " vs " +
                                b.model()->describe());
}

GradedClass add(const GradedClass& x, const GradedClass& y) { return x + y; }

GradedClass multiply(const GradedClass& x, const GradedClass& y) { return x * y; }

GradedClass checkSigns(const GradedClass& x) {
  std::vector<Integer> coeffs = x.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (x.model()->dimOf(i) % 2 != 0) coeffs[i] = -coeffs[i];
  return GradedClass(x.model(), std::move(coeffs));
}

GradedClass invertUnit(const GradedClass& u) {
  const auto& model = u.model();
  const Integer& lead = u[model->fundamentalIndex()];
  if (lead != 1 && lead != -1)
    throw std::domain_error("invertUnit: coefficient of [X] is " + lead.get_str() +
                            ", expected +1 or -1");
  // u = lead * (1 + a) with a nilpotent; u^{-1} = lead * sum (-a)^i.
  GradedClass one = GradedClass::unit(model);
  GradedClass a = u.scaled(lead) - one;
  GradedClass minusA = -a;
  GradedClass term = one;
  GradedClass sum = one;
  for (int i = 0; i < model->dimension(); ++i) {
    term = term * minusA;
    if (term.isZero()) break;
    sum += term;
  }
  return sum.scaled(lead);
}

bool isEffective(const GradedClass& x) {
  bool positive = false;
  for (auto& c : x.coeffs()) {
    if (c < 0) return false;
    if (c > 0) positive = true;
  }
  return positive;
}

Integer degreeOf(const GradedClass& x) { return x[x.model()->pointIndex()]; }

}  // namespace csm
