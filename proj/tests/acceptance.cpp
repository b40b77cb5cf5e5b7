// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "csm/arrangement.hpp"
#include "csm/cells.hpp"
#include "csm/constructible.hpp"
#include "csm/tables.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace csm;

namespace {

using Failures = std::vector<std::string>;

template <class A, class B>
void expect(Failures& f, const A& actual, const B& expected, const std::string& what) {
  if (!(actual == expected)) f.push_back(what);
}

std::string join(const std::vector<Integer>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

Failures gr26Anchor() {
  Failures f;
  auto report = cli::cmdGrassmannian({2, 6, std::string("paper-31"), std::nullopt, std::nullopt});
  if (!report.allPass()) f.push_back("grassmannian --k 2 --n 6 has failing checks");
  auto table = loadSsmTable(builtinFixture("paper-31"));
  auto row = table.row({3, 1});
  const std::vector<Partition> order{{3, 1}, {2, 1}, {3}, {2}, {1, 1}, {1}, {}};
  const std::vector<long> printed{1, -3, -4, 13, 5, -22, 22};
  for (std::size_t i = 0; i < order.size(); ++i)
    expect(f, row.coefficientOf(order[i]), Integer(printed[i]),
           "coefficient of [X(" + order[i].str() + ")]");
  // Through the tangent-class engine the cell has Euler characteristic 1.
  auto csm = multiply(row, tangentChernClassGrassmannian(2, 6));
  expect(f, degreeOf(csm), Integer(1), "degree of the (3,1) CSM class");
  return f;
}

Failures gr25Matrix() {
  Failures f;
  auto report = cli::cmdGrassmannian({2, 5, std::string("paper"), std::nullopt, std::nullopt});
  for (const char* name : {"unitriangularity", "point-row", "alternation", "partition-of-unity-csm",
                           "partition-of-unity-ssm", "round-trip"}) {
    bool found = false;
    for (auto& c : report.checks)
      if (c.name == name) {
        found = true;
        if (!c.pass) f.push_back(std::string(name) + " failed");
      }
    if (!found) f.push_back(std::string(name) + " not run");
  }
  auto calibration = calibrate(builtinFixture("paper"));
  const auto& ssm = calibration.ssm;
  expect(f, ssm.isFull(), true, "calibrated table is full");
  expect(f, csmFromSsm(ssmFromCsm(csmFromSsm(ssm))), csmFromSsm(ssm), "round trip");
  expect(f, alternationCheck(ssm).size(), 0u, "alternation violations");
  // Partition of unity against the tangent class from the independent oracle.
  auto model = RingModel::grassmannian(2, 5);
  GradedClass total(model);
  for (auto& r : csmFromSsm(ssm).rows) total += r;
  GradedClass tangent(model);
  for (auto& [lambda, c] : oracle::grassmannianTangentClass(2, 5))
    tangent += GradedClass::schubertClass(model, Partition(lambda)).scaled(c);
  expect(f, total, tangent, "sum of CSM rows");
  for (std::size_t r = 0; r < ssm.rows.size(); ++r)
    for (std::size_t c = 0; c < model->rank(); ++c) {
      auto ci = model->indexOf(ssm.cells[r]);
      if (c == *ci) expect(f, ssm.entry(r, c), Integer(1), "diagonal entry");
      if (model->dimOf(c) > model->dimOf(*ci) || (model->dimOf(c) == model->dimOf(*ci) && c != *ci))
        expect(f, ssm.entry(r, c), Integer(0), "entry above the diagonal");
    }
  expect(f, ssm.row({}), GradedClass::point(model), "point row");
  return f;
}

Failures projectiveAlternation() {
  Failures f;
  for (int n = 0; n <= 10; ++n)
    for (int j = 0; j <= n; ++j) {
      auto s = ssmCellProjective(j, n);
      for (int d = 0; d <= n; ++d) {
        Integer signedCoeff = (j - d) % 2 == 0 ? s[d] : Integer(-s[d]);
        if (d > j) expect(f, s[d], Integer(0), "term above [P^j]");
        else if (signedCoeff < 0)
          f.push_back("n=" + std::to_string(n) + " j=" + std::to_string(j) + " d=" + std::to_string(d));
      }
      expect(f, s[j], Integer(1), "top term of C^" + std::to_string(j));
    }
  return f;
}

Failures pointClass() {
  Failures f;
  for (int n = 0; n <= 10; ++n)
    expect(f, ssmCellProjective(0, n), GradedClass::point(RingModel::projective(n)),
           "P^" + std::to_string(n));
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto model = RingModel::grassmannian(k, n);
      auto point = GradedClass::point(model);
      expect(f, multiply(invertUnit(tangentChernClassGrassmannian(model)), point), point,
             "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
  expect(f, calibrate(builtinFixture("paper")).ssm.row({}), GradedClass::point(RingModel::grassmannian(2, 5)),
         "Gr(2,5) fixture");
  for (int n = 2; n <= 7; ++n)
    expect(f, ssmFromCsm(csmTableGrassmannianLine(n)).row({}), GradedClass::point(RingModel::grassmannian(1, n)),
           "Gr(1," + std::to_string(n) + ") pipeline");
  return f;
}

Failures booleanArrangements() {
  Failures f;
  for (int n = 1; n <= 6; ++n) {
    auto a = Arrangement::boolean(n);
    auto report = effectivityReport(a);
    // Oracle: pi(t) = sum over coordinate subsets S of mu(S) (-t)^|S|.
    auto mu = oracle::booleanMobius(n + 1);
    std::vector<Integer> expected(n + 2, Integer(0));
    for (unsigned s = 0; s < mu.size(); ++s) {
      int size = __builtin_popcount(s);
      expected[size] += size % 2 == 0 ? mu[s] : Integer(-mu[s]);
    }
    expect(f, report.poincare, expected, "pi for n=" + std::to_string(n));
    std::vector<Integer> binom;
    for (int c = 0; c <= n + 1; ++c) binom.push_back(binomial(n + 1, c));
    expect(f, report.poincare, binom, "(1+t)^(n+1) for n=" + std::to_string(n));
    // (1 - h)^{-(n+1)} as the (n+1)-fold product of 1 + h + h^2 + ..., truncated.
    std::vector<Integer> series(n + 1, Integer(0));
    series[0] = 1;
    for (int r = 0; r <= n; ++r)
      for (int d = 1; d <= n; ++d) series[d] += series[d - 1];
    for (int c = 0; c <= n; ++c) {
      expect(f, report.ssmSigned[n - c], series[c], "series coefficient c=" + std::to_string(c));
      expect(f, series[c], binomial(n + c, c), "binomial coefficient c=" + std::to_string(c));
    }
    expect(f, report.effective, true, "effective for n=" + std::to_string(n));
    if (n == 2) expect(f, report.eulerCharacteristic, Integer(0), "chi of the P^2 complement");
  }
  return f;
}

Failures randomArrangements() {
  Failures f;
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 1, 4);
    auto a = gen::randomArrangement(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 8)));
    auto report = effectivityReport(a);
    const std::string tag = "trial " + std::to_string(trial);
    if (!report.effective) f.push_back(tag + ": signed SSM not effective " + join(report.ssmSigned.coeffs()));
    if (!report.poincareValid) f.push_back(tag + ": pi = " + join(report.poincare));
    expect(f, report.poincare, oracle::whitneyPoincare(a.hyperplanes(), n), tag + ": Whitney oracle");
  }
  return f;
}

Failures constructibleSuite() {
  Failures f;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto space = gen::randomSpace(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 8)), true);
    auto phi = gen::randomFunction(rng, space);
    auto cc = toCCCoefficients(phi);
    expect(f, fromCCCoefficients(cc, space->euler()), phi, "round trip phi -> CC -> phi");
    CCCycle random{space, {}};
    for (std::size_t y = 0; y < space->size(); ++y) random.coeffs.push_back(oracle::randomInteger(rng, -5, 5));
    expect(f, toCCCoefficients(fromCCCoefficients(random, space->euler())), random, "round trip CC -> phi -> CC");
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto a = gen::randomSpace(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 4)), true);
    auto b = gen::randomSpace(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 4)), true);
    auto phi = gen::randomFunction(rng, a);
    auto psi = gen::randomFunction(rng, b);
    auto box = toCCCoefficients(boxProduct(phi, psi));
    auto ca = toCCCoefficients(phi), cb = toCCCoefficients(psi);
    for (std::size_t i = 0; i < a->size(); ++i)
      for (std::size_t j = 0; j < b->size(); ++j)
        expect(f, box.coeffs[i * b->size() + j], ca.coeffs[i] * cb.coeffs[j], "box product multiplicativity");
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto target = gen::randomSpace(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), false);
    std::vector<Stratum> strata;
    std::vector<std::size_t> assignment;
    std::vector<Integer> degree;
    for (std::size_t t = 0; t < target->size(); ++t)
      for (int c = gen::uniform(rng, 1, 2); c > 0; --c) {
        Integer d(gen::uniform(rng, 1, 3));
        strata.push_back({"s" + std::to_string(strata.size()), target->stratum(t).dim, d * target->stratum(t).chiC});
        assignment.push_back(t);
        degree.push_back(d);
      }
    FiniteStratMap map{StratSpace::create(strata, {}), target, assignment, degree};
    map.validate();
    auto phi = gen::randomFunction(rng, map.source);
    expect(f, eulerCharacteristic(finitePushforward(map, phi)), eulerCharacteristic(phi), "pushforward chi");
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto space = gen::randomSpace(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 6)), true);
    std::vector<std::pair<std::size_t, Integer>> components;
    std::vector<Integer> expected(space->size(), Integer(0));
    for (std::size_t s = 0; s < space->size(); ++s)
      if (components.empty() || gen::uniform(rng, 0, 1) == 1) {
        components.emplace_back(s, Integer(gen::uniform(rng, 1, 6)));
        expected[s] = components.back().second;
      }
    auto cc = toCCCoefficients(behrendFunction(space, components));
    expect(f, cc.coeffs, expected, "Behrend multiplicities");
    expect(f, isEffectiveCC(cc), true, "Behrend effectivity");
  }
  for (int n = 0; n <= 6; ++n) {
    auto cells = projectiveCellSpace(n);
    for (int trial = 0; trial < 20; ++trial) {
      auto phi = gen::randomFunction(rng, cells);
      expect(f, degreeOf(classOf(phi)), eulerCharacteristic(phi), "degree of c_* on P^" + std::to_string(n));
    }
  }
  return f;
}

Failures crossModule() {
  Failures f;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Integer> row(n + 1, Integer(0));
    row[0] = 1;
    Arrangement single(n, IntegerMatrix{row});
    auto report = effectivityReport(single);
    expect(f, report.csm, csmCellProjective(n, n), "single hyperplane csm, n=" + std::to_string(n));
    auto signedCell = checkSigns(ssmCellProjective(n, n));
    expect(f, report.ssmSigned, n % 2 == 0 ? signedCell : -signedCell,
           "single hyperplane signed ssm, n=" + std::to_string(n));
  }
  // Gr(1,1) is not a model (k < n is required), so the comparison starts at P^1.
  for (int n = 1; n <= 6; ++n) {
    auto line = csmTableGrassmannianLine(n + 1);
    auto projective = csmTableProjective(n);
    auto lineSsm = ssmFromCsm(line);
    auto projectiveSsm = ssmFromCsm(projective);
    if (line.rows.size() != projective.rows.size()) {
      f.push_back("row counts differ for n=" + std::to_string(n));
      continue;
    }
    for (std::size_t r = 0; r < line.rows.size(); ++r) {
      expect(f, line.rows[r].coeffs(), projective.rows[r].coeffs(), "csm row " + std::to_string(r));
      expect(f, lineSsm.rows[r].coeffs(), projectiveSsm.rows[r].coeffs(), "ssm row " + std::to_string(r));
      expect(f, lineSsm.rows[r].coeffs(), ssmCellProjective(static_cast<int>(r), n).coeffs(),
             "ssmCellProjective row " + std::to_string(r));
    }
  }
  return f;
}

struct Criterion {
  const char* id;
  const char* title;
  double budgetSeconds;
  std::function<Failures()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Gr(2,6) row of the cell (3,1)", 1.0, gr26Anchor},
      {"AC2", "Gr(2,5) matrix", 5.0, gr25Matrix},
      {"AC3", "projective alternation, n <= 10", 5.0, projectiveAlternation},
      {"AC4", "SSM class of a point", 10.0, pointClass},
      {"AC5", "Boolean arrangements, n <= 6", 2.0, booleanArrangements},
      {"AC6", "200 random arrangements", 30.0, randomArrangements},
      {"AC7", "constructible function properties", 10.0, constructibleSuite},
      {"AC8", "cross-module consistency", 5.0, crossModule},
  };
  int failed = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Failures failures;
    try {
      failures = c.run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budgetSeconds) {
      std::ostringstream msg;
      msg << "over the " << c.budgetSeconds << " s budget";
      failures.push_back(msg.str());
    }
    std::cout << c.id << " " << (failures.empty() ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(3) << seconds << " s  " << c.title << "\n";
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i) std::cout << "    " << failures[i] << "\n";
    if (failures.size() > 10) std::cout << "    ... " << failures.size() - 10 << " more\n";
    failed += failures.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
