#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/random_inputs.hpp"
#include "trank/laurent.hpp"

using namespace trank;
using testsupport::Rational;

namespace {
LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}
}  // namespace

TEST_CASE("arithmetic basics") {
  const LaurentPoly p = poly({{0, 1}, {2, 3}});
  const LaurentPoly q = poly({{0, -1}, {1, 5}});
  CHECK((p + q) == poly({{1, 5}, {2, 3}}));
  CHECK((p - p).is_zero());
  CHECK((p * q) == poly({{0, -1}, {1, 5}, {2, -3}, {3, 15}}));
  CHECK(p.scaled(2, -1) == poly({{-1, 2}, {1, 6}}));
  CHECK(poly({{1, 1}, {-1, -1}}).reciprocal_variable() == poly({{-1, 1}, {1, -1}}));
}

TEST_CASE("printing") {
  CHECK(poly({{-1, -2}, {0, 1}, {2, 3}}).to_string() == "-2*t^-1 + 1 + 3*t^2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(poly({{1, 1}}).to_string() == "t");
  CHECK(poly({{0, 1}, {1, -1}, {2, 1}}).to_string() == "1 - t + t^2");
  CHECK(poly({{-3, 1}}).to_string() == "t^-3");
  CHECK(poly({{0, -7}}).to_string() == "-7");
}

TEST_CASE("rank examples") {
  LaurentMatrix zero(2, 3);
  CHECK(laurent_rank(zero) == 0);

  LaurentMatrix row(1, 2);
  row.at(0, 1) = poly({{1, 1}, {0, -1}});  // t - 1
  CHECK(laurent_rank(row) == 1);

  LaurentMatrix prop(2, 1);
  prop.at(0, 0) = poly({{0, 1}, {1, -1}, {2, 1}});
  prop.at(1, 0) = -prop.at(0, 0);
  CHECK(laurent_rank(prop) == 1);

  // 2x2 with proportional rows over Q(t): (1, t), (t^-1, 1)
  LaurentMatrix dep(2, 2);
  dep.at(0, 0) = LaurentPoly::one();
  dep.at(0, 1) = poly({{1, 1}});
  dep.at(1, 0) = poly({{-1, 1}});
  dep.at(1, 1) = LaurentPoly::one();
  CHECK(laurent_rank(dep) == 1);

  // generically independent rows
  LaurentMatrix indep(2, 2);
  indep.at(0, 0) = LaurentPoly::one();
  indep.at(0, 1) = poly({{1, 1}});
  indep.at(1, 0) = poly({{1, 1}});
  indep.at(1, 1) = LaurentPoly::one();
  CHECK(laurent_rank(indep) == 2);
}

TEST_CASE("scan orders agree and evaluation bounds hold on random matrices") {
  std::mt19937 rng(47);
  const Rational points[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-2),
                             Rational(5, 3)};
  for (int i = 0; i < 120; ++i) {
    const LaurentMatrix m = testsupport::random_laurent_matrix(rng, 5, 6, 9);
    const std::size_t r1 = laurent_rank(m, PivotScan::RowMajor);
    const std::size_t r2 = laurent_rank(m, PivotScan::ColMajor);
    CHECK(r1 == r2);

    bool attained = false;
    for (const Rational& t0 : points) {
      const std::size_t re = testsupport::evaluated_rank(m, t0);
      CHECK(re <= r1);
      if (re == r1) attained = true;
    }
    CHECK(attained);  // five points against degree <= 6 denominators
  }
}

TEST_CASE("rank is invariant under t -> 1/t") {
  std::mt19937 rng(53);
  for (int i = 0; i < 120; ++i) {
    const LaurentMatrix m = testsupport::random_laurent_matrix(rng, 4, 6, 9);
    LaurentMatrix flipped(m.rows, m.cols);
    for (std::size_t k = 0; k < m.entries.size(); ++k)
      flipped.entries[k] = m.entries[k].reciprocal_variable();
    CHECK(laurent_rank(m) == laurent_rank(flipped));
  }
}
