#include "csm/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include "polynomial.hpp"

namespace csm {

using detail::Exponent;
using detail::Polynomial;

GradedClass tangentChernClassProjective(const ModelPtr& model) {
  if (model->kind() != ModelKind::ProjectiveSpace)
    throw std::invalid_argument("tangentChernClassProjective needs a projective model");
  GradedClass out(model);
  for (int c = 0; c <= model->n(); ++c)
    out += GradedClass::hyperplanePower(model, c).scaled(binomial(model->n() + 1, c));
  return out;
}

GradedClass tangentChernClassGrassmannian(const ModelPtr& model) {
  if (model->kind() != ModelKind::Grassmannian)
    throw std::invalid_argument("tangentChernClassGrassmannian needs a Grassmannian model");
  // Gr(k,n) = Gr(n-k,n) sends [X(lambda)] to [X(lambda')]; the expansion below
  // is exponential in k, so run it on the side with fewer variables.
  if (2 * model->k() > model->n()) {
    auto dual = tangentChernClassGrassmannian(RingModel::grassmannian(model->n() - model->k(), model->n()));
    GradedClass out(model);
    for (std::size_t i = 0; i < dual.model()->rank(); ++i)
      if (dual[i] != 0)
        out += GradedClass::schubertVariety(model, dual.model()->label(i).conjugate()).scaled(dual[i]);
    return out;
  }
  const int k = model->k();
  const int m = model->n() - k;
  const int top = model->dimension();

  // F(t) = prod_i (1 + x_i + t) = sum_r a_r(x) t^r, with t as variable k.
  Polynomial f = Polynomial::constant(k + 1, 1);
  for (int i = 0; i < k; ++i) {
    Polynomial factor = Polynomial::constant(k + 1, 1);
    factor += Polynomial::variable(k + 1, i);
    factor += Polynomial::variable(k + 1, k);
    f = f.times(factor);
  }
  std::vector<Polynomial> a(k + 1, Polynomial(k));
  for (auto& [e, c] : f.terms()) a[e[k]].addTerm(Exponent(e.begin(), e.begin() + k), c);

  std::vector<Polynomial> h;
  for (int r = 0; r <= m; ++r) h.push_back(detail::completeHomogeneous(k, r));

  // prod_j F(y_j) = sum_mu (prod_j a_{mu_j}) m_mu(y), mu with <= m parts each <= k;
  // then m_mu(y) = sum_beta M e(y)^beta and e_r(y) -> h_r(x).
  Polynomial total(k);
  for (int size = 0; size <= top; ++size) {
    for (auto& mu : partitionsOf(size, k, m)) {
      int budget = top - size;
      Polynomial coeff = Polynomial::constant(k, 1);
      for (int j = 0; j < m; ++j) coeff = coeff.times(a[mu[j]], budget);
      if (coeff.isZero()) continue;
      Polynomial inElementary = detail::monomialInElementary(mu, m);
      for (auto& [beta, c] : inElementary.terms()) {
        Polynomial term = coeff.scaled(c);
        for (int r = 0; r < m; ++r)
          for (int p = 0; p < beta[r]; ++p) term = term.times(h[r + 1], top);
        total += term;
      }
    }
  }

  GradedClass out(model);
  const Rectangle rect = model->rectangle();
  for (auto& [lambda, c] : detail::schurExpansion(total)) {
    if (!lambda.fitsIn(rect)) continue;
    out += GradedClass::schubertClass(model, lambda).scaled(c);
  }
  return out;
}

GradedClass tangentChernClassGrassmannian(int k, int n) {
  return tangentChernClassGrassmannian(RingModel::grassmannian(k, n));
}

namespace {

void requireCellRange(int j, const ModelPtr& model) {
  if (model->kind() != ModelKind::ProjectiveSpace)
    throw std::invalid_argument("projective cell classes need a projective model");
  if (j < 0 || j > model->n())
    throw std::out_of_range("cell dimension " + std::to_string(j) + " outside [0, " +
                            std::to_string(model->n()) + "]");
}

/// c(TP^j) cap [P^j], pushed forward to the ambient P^n.
GradedClass linearSubspaceClass(int j, const ModelPtr& model) {
  GradedClass out(model);
  for (int c = 0; c <= j; ++c)
    out += GradedClass::basis(model, static_cast<std::size_t>(j - c), binomial(j + 1, c));
  return out;
}

}  // namespace

GradedClass csmCellProjective(int j, const ModelPtr& model) {
  requireCellRange(j, model);
  GradedClass out = linearSubspaceClass(j, model);
  if (j > 0) out -= linearSubspaceClass(j - 1, model);
  return out;
}

GradedClass csmCellProjective(int j, int n) { return csmCellProjective(j, RingModel::projective(n)); }

GradedClass ssmCellProjective(int j, const ModelPtr& model) {
  return invertUnit(tangentChernClassProjective(model)) * csmCellProjective(j, model);
}

GradedClass ssmCellProjective(int j, int n) { return ssmCellProjective(j, RingModel::projective(n)); }

bool CellTable::isFull() const { return model && cells == model->labels(); }

const GradedClass& CellTable::row(const Partition& cell) const {
  auto it = std::find(cells.begin(), cells.end(), cell);
  if (it == cells.end()) throw std::out_of_range("no row for cell " + cell.str());
  return rows[static_cast<std::size_t>(it - cells.begin())];
}

bool CellTable::operator==(const CellTable& other) const {
  return *model == *other.model && cells == other.cells && rows == other.rows;
}

GradedClass tangentClassOf(const ModelPtr& model) {
  return model->kind() == ModelKind::ProjectiveSpace ? tangentChernClassProjective(model)
                                                     : tangentChernClassGrassmannian(model);
}

namespace {

template <class Out, class In>
Out mapRows(const In& in, const GradedClass& factor) {
  Out out;
  out.model = in.model;
  out.cells = in.cells;
  for (auto& r : in.rows) {
    requireSameModel(r, factor);
    out.rows.push_back(factor * r);
  }
  return out;
}

}  // namespace

SsmTable ssmFromCsm(const CsmTable& csm, const GradedClass& tangentClass) {
  return mapRows<SsmTable>(csm, invertUnit(tangentClass));
}

CsmTable csmFromSsm(const SsmTable& ssm, const GradedClass& tangentClass) {
  return mapRows<CsmTable>(ssm, tangentClass);
}

SsmTable ssmFromCsm(const CsmTable& csm) { return ssmFromCsm(csm, tangentClassOf(csm.model)); }

CsmTable csmFromSsm(const SsmTable& ssm) { return csmFromSsm(ssm, tangentClassOf(ssm.model)); }

CsmTable csmTableProjective(int n) {
  CsmTable out;
  out.model = RingModel::projective(n);
  out.cells = out.model->labels();
  for (int j = 0; j <= n; ++j) out.rows.push_back(csmCellProjective(j, out.model));
  return out;
}

SsmTable ssmTableProjective(int n) { return ssmFromCsm(csmTableProjective(n)); }

CsmTable csmTableGrassmannianLine(int n) {
  CsmTable out;
  out.model = RingModel::grassmannian(1, n);
  out.cells = out.model->labels();
  const auto& model = out.model;
  GradedClass onePlusSigma =
      GradedClass::unit(model) + GradedClass::schubertClass(model, Partition{1});
  auto closureClass = [&](int j) {
    GradedClass c = GradedClass::schubertVariety(model, j == 0 ? Partition{} : Partition{j});
    for (int p = 0; p <= j; ++p) c = onePlusSigma * c;
    return c;
  };
  for (int j = 0; j < n; ++j) {
    GradedClass row = closureClass(j);
    if (j > 0) row -= closureClass(j - 1);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<AlternationViolation> alternationCheck(const SsmTable& ssm) {
  std::vector<AlternationViolation> out;
  for (std::size_t r = 0; r < ssm.rows.size(); ++r) {
    auto cellIndex = ssm.model->indexOf(ssm.cells[r]);
    int cellDim = ssm.model->dimOf(*cellIndex);
    const GradedClass& row = ssm.rows[r];
    for (std::size_t w = 0; w < row.coeffs().size(); ++w) {
      int gap = cellDim - ssm.model->dimOf(w);
      const Integer& a = row[w];
      bool ok = (gap % 2 == 0) ? a >= 0 : a <= 0;
      if (!ok) out.push_back({ssm.cells[r], ssm.model->label(w), a});
    }
  }
  return out;
}

CellTable frStableCompare(const CellTable& table) {
  const Rectangle rect = table.model->rectangle();
  const auto& model = table.model;
  std::vector<std::pair<Partition, GradedClass>> dualRows;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<Integer> coeffs(model->rank());
    for (std::size_t w = 0; w < model->rank(); ++w) {
      auto source = model->indexOf(dualInRectangle(model->label(w), rect));
      coeffs[w] = table.rows[r][*source];
    }
    dualRows.emplace_back(dualInRectangle(table.cells[r], rect),
                          GradedClass(model, std::move(coeffs)));
  }
  std::sort(dualRows.begin(), dualRows.end(), [&](const auto& a, const auto& b) {
    return *model->indexOf(a.first) < *model->indexOf(b.first);
  });
  CellTable out;
  out.model = model;
  for (auto& [cell, row] : dualRows) {
    out.cells.push_back(cell);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> unitriangularityWitnesses(const CellTable& table) {
  std::vector<std::string> out;
  if (!table.isFull()) {
    out.push_back("table is partial (" + std::to_string(table.rows.size()) + " of " +
                  std::to_string(table.model->rank()) + " rows)");
    return out;
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.model->rank(); ++c) {
      const Integer& a = table.entry(r, c);
      if (c == r && a != 1)
        out.push_back("diagonal entry at " + table.cells[r].str() + " is " + a.get_str());
      if (c > r && a != 0)
        out.push_back("entry above diagonal at row " + table.cells[r].str() + ", column " +
                      table.model->label(c).str() + " is " + a.get_str());
    }
  }
  return out;
}

std::vector<std::string> pointRowWitnesses(const CellTable& table) {
  std::vector<std::string> out;
  auto it = std::find(table.cells.begin(), table.cells.end(), Partition{});
  if (it == table.cells.end()) return out;
  const GradedClass& row = table.rows[static_cast<std::size_t>(it - table.cells.begin())];
  if (!(row == GradedClass::point(table.model)))
    out.push_back("point cell row is " + row.str() + ", expected the point class");
  return out;
}

std::vector<std::string> topTermWitnesses(const CellTable& table) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cell = table.cells[r];
    int dim = cell.size();
    const GradedClass& row = table.rows[r];
    auto top = row.topDimension();
    GradedClass expected = GradedClass::basis(table.model, *table.model->indexOf(cell));
    if (!top || *top != dim || !(row.component(dim) == expected))
      out.push_back("row " + cell.str() + ": top-dimensional part is " +
                    (top ? row.component(*top).str() : std::string("0")) + ", expected " +
                    expected.str());
  }
  return out;
}

std::vector<std::string> partitionOfUnityWitnesses(const CellTable& table,
                                                   const GradedClass& expected) {
  std::vector<std::string> out;
  if (!table.isFull()) {
    out.push_back("table is partial; partition of unity needs every cell");
    return out;
  }
  GradedClass sum(table.model);
  for (auto& r : table.rows) sum += r;
  if (!(sum == expected)) out.push_back("sum of rows is " + sum.str() + ", expected " + expected.str());
  return out;
}

std::vector<std::string> cellEulerWitnesses(const CsmTable& csm) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < csm.rows.size(); ++r) {
    Integer d = degreeOf(csm.rows[r]);
    if (d != 1)
      out.push_back("cell " + csm.cells[r].str() + ": degree of csm class is " + d.get_str() +
                    ", expected 1");
  }
  return out;
}

}  // namespace csm
