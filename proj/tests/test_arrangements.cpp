#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csm/arrangement.hpp"
#include "csm/cells.hpp"
#include "csm/inputs.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace csm;
using json_io::Json;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

IntegerMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix out;
  for (auto& r : rows) out.push_back(ints(r));
  return out;
}

std::vector<Integer> byDimension(const GradedClass& x) { return x.coeffs(); }

}  // namespace

TEST_CASE("empty arrangement") {
  for (int n = 0; n <= 5; ++n) {
    Arrangement a(n, IntegerMatrix{});
    IntersectionLattice lattice(a);
    CHECK(lattice.size() == 1);
    CHECK(poincarePolynomial(lattice) == ints({1}));
    auto model = RingModel::projective(n);
    CHECK(csmComplement(a) == tangentChernClassProjective(model));
    CHECK(ssmSignedComplement(a) == GradedClass::basis(model, n));
    auto report = effectivityReport(a);
    CHECK(report.eulerCharacteristic == n + 1);
    CHECK(report.effective);
  }
}

TEST_CASE("single hyperplane complement is the big cell") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Integer> row(n + 1, Integer(0));
    row[n] = 1;
    Arrangement a(n, IntegerMatrix{row});
    IntersectionLattice lattice(a);
    CHECK(lattice.size() == 2);
    CHECK(poincarePolynomial(lattice) == ints({1, 1}));
    CHECK(csmComplement(a) == csmCellProjective(n, n));
    auto signedCell = checkSigns(ssmCellProjective(n, n));
    auto ssm = ssmSignedComplement(a);
    CHECK(ssm == (n % 2 == 0 ? signedCell : -signedCell));
    for (auto& c : ssm.coeffs()) CHECK(c == 1);
    CHECK(effectivityReport(a).eulerCharacteristic == 1);
  }
}

TEST_CASE("Boolean arrangement") {
  for (int n = 1; n <= 5; ++n) {
    auto a = Arrangement::boolean(n);
    REQUIRE(a.size() == static_cast<std::size_t>(n + 1));
    IntersectionLattice lattice(a);
    // Flats of the central arrangement correspond to subsets of coordinates.
    CHECK(lattice.size() == 1u << (n + 1));
    auto mu = oracle::booleanMobius(n + 1);
    for (auto& flat : lattice.flats()) {
      unsigned mask = 0;
      for (auto h : flat.hyperplanes) mask |= 1u << h;
      CHECK(flat.mobius == mu[mask]);
    }
    std::vector<Integer> expected;
    for (int c = 0; c <= n + 1; ++c) expected.push_back(binomial(n + 1, c));
    CHECK(poincarePolynomial(lattice) == expected);
    // The torus: c_SM = [P^n], signed s_SM coefficients binom(n + c, c).
    CHECK(csmComplement(a) == GradedClass::basis(RingModel::projective(n), n));
    auto ssm = ssmSignedComplement(a);
    for (int c = 0; c <= n; ++c) CHECK(ssm[n - c] == binomial(n + c, c));
    CHECK(effectivityReport(a).eulerCharacteristic == 0);
  }
}

TEST_CASE("generic and concurrent lines differ") {
  Arrangement generic(2, matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  Arrangement concurrent(2, matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  CHECK(poincarePolynomial(IntersectionLattice(generic)) == ints({1, 3, 3, 1}));
  CHECK(poincarePolynomial(IntersectionLattice(concurrent)) == ints({1, 3, 2}));
  auto g = effectivityReport(generic);
  auto c = effectivityReport(concurrent);
  CHECK(g.eulerCharacteristic == 0);
  // Three concurrent lines leave C x (C minus two points).
  CHECK(c.eulerCharacteristic == -1);
  CHECK(byDimension(g.csm) == ints({0, 0, 1}));
  CHECK(byDimension(c.csm) == ints({-1, 0, 1}));
  CHECK(byDimension(c.ssmSigned) == ints({5, 3, 1}));
}

TEST_CASE("random arrangements against Whitney and inclusion-exclusion") {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 1, 4);
    auto a = gen::randomArrangement(rng, n, static_cast<std::size_t>(gen::uniform(rng, 0, 8)));
    IntersectionLattice lattice(a);
    auto pi = poincarePolynomial(lattice);
    CHECK(pi == oracle::whitneyPoincare(a.hyperplanes(), n));
    CHECK(byDimension(csmComplement(a, pi)) == oracle::inclusionExclusionCsm(a.hyperplanes(), n));
    auto report = effectivityReport(a);
    CHECK(report.eulerCharacteristic == oracle::inclusionExclusionEuler(a.hyperplanes(), n));
    CHECK(report.csm[0] == report.eulerCharacteristic);
    CHECK(report.poincareValid);
    CHECK(report.effective);
    CHECK(report.latticeSize == lattice.size());

    // Moebius values alternate in sign with codimension and sum to zero over
    // the interval below the minimal flat.
    for (auto& flat : lattice.flats()) {
      CHECK((flat.codim % 2 == 0 ? flat.mobius : Integer(-flat.mobius)) > 0);
      CHECK(flat.codim == matrixRank(flat.equations));
    }
    if (a.size() > 0) {
      std::size_t top = 0;
      for (std::size_t z = 0; z < lattice.size(); ++z)
        if (lattice.flats()[z].codim > lattice.flats()[top].codim) top = z;
      Integer interval = 0;
      for (std::size_t z = 0; z < lattice.size(); ++z)
        if (lattice.leq(z, top)) interval += lattice.flats()[z].mobius;
      CHECK(interval == 0);
    }
    for (std::size_t y = 0; y < lattice.size(); ++y) CHECK(lattice.leq(0, y));
  }
}

TEST_CASE("canonical row space") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int cols = gen::uniform(rng, 1, 5);
    const int rows = gen::uniform(rng, 1, 4);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    IntegerMatrix integral;
    for (auto& r : m) {
      for (auto& v : r) v = gen::uniform(rng, -3, 3);
      integral.push_back(primitiveRow(r));
    }
    // Random invertible row operations: scale by nonzero rationals and add multiples.
    std::vector<std::vector<Rational>> mixed = m;
    for (int op = 0; op < 6 && rows > 1; ++op) {
      int i = gen::uniform(rng, 0, rows - 1), j = gen::uniform(rng, 0, rows - 1);
      if (i == j) continue;
      Rational f(Integer(gen::uniform(rng, -3, 3)), Integer(gen::uniform(rng, 1, 4)));
      f.canonicalize();
      for (int c = 0; c < cols; ++c) mixed[i][c] += f * mixed[j][c];
    }
    for (auto& r : mixed) {
      Rational scale(Integer(gen::uniform(rng, 1, 5)), Integer(gen::uniform(rng, 1, 5)));
      scale.canonicalize();
      for (auto& v : r) v *= scale;
    }
    IntegerMatrix mixedIntegral;
    for (auto& r : mixed) {
      bool zero = true;
      for (auto& v : r) zero = zero && v == 0;
      if (!zero) mixedIntegral.push_back(primitiveRow(r));
    }
    // Rows that were zero stay zero under these operations.
    IntegerMatrix nonzero;
    for (auto& r : integral) {
      bool zero = true;
      for (auto& v : r) zero = zero && v == 0;
      if (!zero) nonzero.push_back(r);
    }
    CHECK(canonicalRowSpace(nonzero) == canonicalRowSpace(mixedIntegral));
    CHECK(matrixRank(nonzero) == oracle::rank(m));
    CHECK(canonicalRowSpace(nonzero).size() == matrixRank(nonzero));
  }
  CHECK(canonicalRowSpace(matrix({{2, 4}, {1, 2}})) == matrix({{1, 2}}));
  CHECK(canonicalRowSpace(matrix({{1, 0}})) != canonicalRowSpace(matrix({{0, 1}})));
  CHECK(primitiveRow({Rational(Integer(-1), Integer(2)), Rational(1)}) == ints({1, -2}));
}

TEST_CASE("arrangement constructor errors") {
  CHECK_THROWS_AS(Arrangement(2, matrix({{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(2, matrix({{0, 0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(2, matrix({{1, 2, 3}, {-2, -4, -6}})), std::invalid_argument);
  CHECK_THROWS_AS(Arrangement(-1, IntegerMatrix{}), std::invalid_argument);
  Arrangement scaled(1, matrix({{-2, 4}}));
  CHECK(scaled.hyperplanes() == matrix({{1, -2}}));
}

TEST_CASE("Poincare polynomial helpers") {
  CHECK(isValidPoincare(ints({1, 3, 2})));
  CHECK_FALSE(isValidPoincare(ints({2, 3})));
  CHECK_FALSE(isValidPoincare(ints({1, -1})));
  CHECK(polynomialString(ints({1, 3, 2})) == "1 + 3t + 2t^2");
  CHECK(polynomialString(ints({1})) == "1");
}

TEST_CASE("arrangement files") {
  auto a = parseArrangement(Json::parse(R"({"n": "2", "hyperplanes": [["1/2", "1", "0"], ["0", "-3/4", "1"]]})"),
                            "inline");
  CHECK(a.n() == 2);
  CHECK(a.hyperplanes() == matrix({{1, 2, 0}, {0, 3, -4}}));
  for (const char* bad : {
           R"({"hyperplanes": []})",
           R"({"n": "2"})",
           R"({"n": "x", "hyperplanes": []})",
           R"({"n": "2", "hyperplanes": [["1", "0"]]})",
           R"({"n": "2", "hyperplanes": [["1", "0", "1/0"]]})",
           R"({"n": "2", "hyperplanes": [["1", "0", "abc"]]})",
           R"({"n": "2", "hyperplanes": [["0", "0", "0"]]})",
           R"({"n": "2", "hyperplanes": [["1", "1", "0"], ["2", "2", "0"]]})",
           R"({"n": "2", "hyperplanes": "1"})",
       })
    CHECK_THROWS_AS(parseArrangement(Json::parse(bad), "inline"), InputError);
}
