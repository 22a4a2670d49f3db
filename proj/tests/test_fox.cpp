#include <doctest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/random_inputs.hpp"
#include "trank/fox.hpp"

using namespace trank;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word::reduce(std::vector<Letter>(ls)); }

// Ring multiplication on the left by a single word, for oracle checks.
FreeGroupRingElement left_mul(const Word& u, const FreeGroupRingElement& e) {
  FreeGroupRingElement out;
  for (const auto& [word, coeff] : e.terms) out.add(multiply(u, word), coeff);
  return out;
}

FreeGroupRingElement add(FreeGroupRingElement a, const FreeGroupRingElement& b) {
  for (const auto& [word, coeff] : b.terms) a.add(word, coeff);
  return a;
}

}  // namespace

TEST_CASE("defining identities") {
  // d(xy)/dx = 1
  FreeGroupRingElement e = fox_derivative(w({{0, 1}, {1, 1}}), 0);
  FreeGroupRingElement expect;
  expect.add(Word(), 1);
  CHECK(e == expect);

  // d(x^-1)/dx = -x^-1
  FreeGroupRingElement e2 = fox_derivative(Word::single(0, -1), 0);
  FreeGroupRingElement expect2;
  expect2.add(Word::single(0, -1), -1);
  CHECK(e2 == expect2);

  // d(h^+-1)/dg = 0 for h != g
  CHECK(fox_derivative(Word::single(1, 1), 0).is_zero());
  CHECK(fox_derivative(Word::single(1, -1), 0).is_zero());
}

TEST_CASE("trefoil relator derivative") {
  // d(x y x y^-1 x^-1 y^-1)/dx = 1 + xy - xyxy^-1x^-1
  const Word r = testsupport::p4_trefoil().relators()[0];
  FreeGroupRingElement expect;
  expect.add(Word(), 1);
  expect.add(w({{0, 1}, {1, 1}}), 1);
  expect.add(w({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}}), -1);
  CHECK(fox_derivative(r, 0) == expect);
}

TEST_CASE("product rule on random words") {
  std::mt19937 rng(59);
  for (int i = 0; i < 200; ++i) {
    const Word u = testsupport::random_raw_word(rng, 3, 8);
    const Word v = testsupport::random_raw_word(rng, 3, 8);
    for (int g = 0; g < 3; ++g) {
      const FreeGroupRingElement lhs = fox_derivative(multiply(u, v), g);
      const FreeGroupRingElement rhs = add(fox_derivative(u, g), left_mul(u, fox_derivative(v, g)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("specialisation") {
  FreeGroupRingElement one;
  one.add(Word(), 1);
  CHECK(specialize(one, Character{{1, 1}}) == LaurentPoly::one());

  FreeGroupRingElement neg;
  neg.add(Word::single(0, -1), -1);
  CHECK(specialize(neg, Character{{1}}) == LaurentPoly::term(-1, -1));

  // 1 + xy - xyxy^-1x^-1 at x=y=1 -> 1 + t^2 - t
  FreeGroupRingElement e;
  e.add(Word(), 1);
  e.add(w({{0, 1}, {1, 1}}), 1);
  e.add(w({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}}), -1);
  LaurentPoly expect;
  expect.add_term(0, 1);
  expect.add_term(2, 1);
  expect.add_term(1, -1);
  CHECK(specialize(e, Character{{1, 1}}) == expect);
}

TEST_CASE("specialised fundamental identity for arbitrary characters") {
  // sum_i sp(dr/dg_i) * (t^{phi(g_i)} - 1) = t^{phi(r)} - 1
  std::mt19937 rng(61);
  std::uniform_int_distribution<long long> value(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const Word r = testsupport::random_raw_word(rng, 3, 10);
    Character phi{{value(rng), value(rng), value(rng)}};
    LaurentPoly sum;
    for (int g = 0; g < 3; ++g) {
      const LaurentPoly dg = specialize(fox_derivative(r, g), phi);
      sum += dg * (LaurentPoly::term(phi.values[static_cast<std::size_t>(g)], 1) -
                   LaurentPoly::one());
    }
    const LaurentPoly expect = LaurentPoly::term(evaluate(phi, r), 1) - LaurentPoly::one();
    CHECK(sum == expect);
  }
}
