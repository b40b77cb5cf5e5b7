#include "csm/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "csm/cells.hpp"

namespace csm {

std::vector<Integer> primitiveRow(const std::vector<Rational>& row) {
  Integer denominators = 1;
  for (auto& q : row) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (auto& q : row) {
    Integer v = q.get_num() * (denominators / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content == 0) return out;
  auto lead = std::find_if(out.begin(), out.end(), [](const Integer& v) { return v != 0; });
  if (*lead < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

namespace {

std::vector<std::vector<Rational>> toRational(const IntegerMatrix& rows) {
  std::vector<std::vector<Rational>> out;
  for (auto& r : rows) {
    std::vector<Rational> q;
    for (auto& v : r) q.emplace_back(v);
    out.push_back(std::move(q));
  }
  return out;
}

/// Reduced row echelon form over Q; zero rows removed.
std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t pivotRow = 0;
  for (std::size_t c = 0; c < cols && pivotRow < m.size(); ++c) {
    std::size_t r = pivotRow;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[pivotRow]);
    Rational inv = 1 / m[pivotRow][c];
    for (auto& v : m[pivotRow]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pivotRow || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[pivotRow][j];
    }
    ++pivotRow;
  }
  m.resize(pivotRow);
  return m;
}

}  // namespace

IntegerMatrix canonicalRowSpace(const IntegerMatrix& rows) {
  IntegerMatrix out;
  for (auto& r : rref(toRational(rows))) out.push_back(primitiveRow(r));
  return out;
}

std::size_t matrixRank(const IntegerMatrix& rows) { return rref(toRational(rows)).size(); }

Arrangement::Arrangement(int n, const std::vector<std::vector<Rational>>& hyperplanes) : n_(n) {
  if (n < 0) throw std::invalid_argument("arrangement needs n >= 0");
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const auto& row = hyperplanes[i];
    if (row.size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " coefficients, expected " +
                                  std::to_string(n + 1));
    auto prim = primitiveRow(row);
    if (std::all_of(prim.begin(), prim.end(), [](const Integer& v) { return v == 0; }))
      throw std::invalid_argument("hyperplane " + std::to_string(i) + " is the zero form");
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (rows_[j] == prim)
        throw std::invalid_argument("hyperplanes " + std::to_string(j) + " and " +
                                    std::to_string(i) + " are proportional");
    rows_.push_back(std::move(prim));
  }
}

Arrangement::Arrangement(int n, const IntegerMatrix& hyperplanes)
    : Arrangement(n, toRational(hyperplanes)) {}

Arrangement Arrangement::boolean(int n) {
  IntegerMatrix rows(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  for (int i = 0; i <= n; ++i) rows[i][i] = 1;
  return Arrangement(n, rows);
}

IntersectionLattice::IntersectionLattice(const Arrangement& a) : ambient_(a.n() + 1) {
  const auto& hyperplanes = a.hyperplanes();
  std::map<IntegerMatrix, std::size_t> index;
  flats_.push_back({{}, 0, {}, Integer(1)});
  index.emplace(IntegerMatrix{}, 0);

  auto containing = [&](const IntegerMatrix& eq) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
      IntegerMatrix stacked = eq;
      stacked.push_back(hyperplanes[j]);
      if (matrixRank(stacked) == eq.size()) out.push_back(j);
    }
    return out;
  };

  // Breadth-first closure: codimension is nondecreasing along flats_.
  for (std::size_t f = 0; f < flats_.size(); ++f) {
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      const auto& hs = flats_[f].hyperplanes;
      if (std::binary_search(hs.begin(), hs.end(), i)) continue;
      IntegerMatrix stacked = flats_[f].equations;
      stacked.push_back(hyperplanes[i]);
      IntegerMatrix eq = canonicalRowSpace(stacked);
      if (index.count(eq)) continue;
      Flat g{eq, eq.size(), containing(eq), Integer(0)};
      index.emplace(eq, flats_.size());
      flats_.push_back(std::move(g));
    }
  }

  for (std::size_t z = 1; z < flats_.size(); ++z) {
    Integer sum = 0;
    for (std::size_t y = 0; y < z; ++y)
      if (leq(y, z)) sum += flats_[y].mobius;
    flats_[z].mobius = -sum;
  }
}

bool IntersectionLattice::leq(std::size_t y, std::size_t z) const {
  const auto& hy = flats_[y].hyperplanes;
  const auto& hz = flats_[z].hyperplanes;
  return std::includes(hz.begin(), hz.end(), hy.begin(), hy.end());
}

PoincarePolynomial mobiusPoincare(const IntersectionLattice& lattice) {
  PoincarePolynomial p(static_cast<std::size_t>(lattice.ambientDimension()) + 1, Integer(0));
  for (auto& flat : lattice.flats())
    p[flat.codim] += (flat.codim % 2 == 0) ? flat.mobius : Integer(-flat.mobius);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

bool isValidPoincare(const PoincarePolynomial& p) {
  return !p.empty() && p.front() == 1 &&
         std::all_of(p.begin(), p.end(), [](const Integer& c) { return c >= 0; });
}

PoincarePolynomial poincarePolynomial(const IntersectionLattice& lattice) {
  PoincarePolynomial p = mobiusPoincare(lattice);
  if (p.front() != 1) throw std::logic_error("Poincare polynomial has constant term " + p.front().get_str());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0)
      throw std::logic_error("Poincare polynomial has negative coefficient " + p[i].get_str() +
                             " at t^" + std::to_string(i));
  return p;
}

std::string polynomialString(const PoincarePolynomial& p, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer mag = abs(p[i]);
    if (!out.empty()) out += p[i] < 0 ? " - " : " + ";
    else if (p[i] < 0) out += "-";
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

/// pi(t) evaluated in Z[h]/(h^{n+1}), by Horner's rule.
GradedClass evaluate(const PoincarePolynomial& pi, const GradedClass& t) {
  GradedClass one = GradedClass::unit(t.model());
  GradedClass result = one.scaled(pi.back());
  for (std::size_t i = pi.size() - 1; i-- > 0;) result = result * t + one.scaled(pi[i]);
  return result;
}

}  // namespace

GradedClass csmComplement(const Arrangement& a, const PoincarePolynomial& pi) {
  auto model = RingModel::projective(a.n());
  GradedClass h = GradedClass::hyperplanePower(model, 1);
  GradedClass onePlusH = GradedClass::unit(model) + h;
  GradedClass t = -(h * invertUnit(onePlusH));
  return evaluate(pi, t) * tangentChernClassProjective(model);
}

GradedClass csmComplement(const Arrangement& a) {
  return csmComplement(a, poincarePolynomial(IntersectionLattice(a)));
}

GradedClass ssmSignedComplement(const Arrangement& a, const PoincarePolynomial& pi) {
  auto model = RingModel::projective(a.n());
  GradedClass h = GradedClass::hyperplanePower(model, 1);
  GradedClass oneMinusH = GradedClass::unit(model) - h;
  GradedClass t = h * invertUnit(oneMinusH);
  return evaluate(pi, t);
}

GradedClass ssmSignedComplement(const Arrangement& a) {
  return ssmSignedComplement(a, poincarePolynomial(IntersectionLattice(a)));
}

ArrangementReport effectivityReport(const Arrangement& a) {
  IntersectionLattice lattice(a);
  ArrangementReport r{{}, GradedClass(RingModel::projective(a.n())),
                      GradedClass(RingModel::projective(a.n())), false, false, Integer(0),
                      lattice.size()};
  r.poincare = mobiusPoincare(lattice);
  r.poincareValid = isValidPoincare(r.poincare);
  r.csm = csmComplement(a, r.poincare);
  r.ssmSigned = ssmSignedComplement(a, r.poincare);
  r.effective = isEffective(r.ssmSigned);
  r.eulerCharacteristic = degreeOf(r.csm);
  return r;
}

}  // namespace csm
