#include <doctest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/random_inputs.hpp"
#include "trank/abelian.hpp"
#include "trank/magnus.hpp"

using namespace trank;

TEST_CASE("torus with the first coordinate direction") {
  const Presentation p2 = testsupport::p2_torus();
  const FakeHnn raw = magnus_rewrite(p2, Character{{1, 0}});
  raw.validate();
  CHECK(raw.d_count == 1);
  CHECK(raw.c_count == 1);
  REQUIRE(raw.relators.size() == 1);

  const FakeHnn f = tietze_simplify(raw);
  CHECK(f.tietze_converged);
  CHECK(f.d_count == 0);
  CHECK(f.c_count == 1);
  CHECK(f.relators.empty());
  // < s, c1 | s c1 s^-1 = c1 >
  REQUIRE(f.conj_images.size() == 1);
  CHECK(f.conj_images[0] == Word::single(1, 1));
  CHECK(grank_upper(f) == 0);
  CHECK(detect_ascending(f) == AscendingVerdict::SigmaMember);
}

TEST_CASE("Baumslag-Solitar ascending direction") {
  const Presentation p3 = testsupport::p3_bs12();
  const FakeHnn raw = magnus_rewrite(p3, Character{{0, 1}});
  CHECK(raw.d_count == 1);
  REQUIRE(raw.c_count == 1);
  // s c1 s^-1 = a^-2 before simplification, with d1 = a
  CHECK(raw.conj_images[0] == Word::single(1, -2));
  REQUIRE(raw.relators.size() == 1);

  const FakeHnn f = tietze_simplify(raw);
  CHECK(f.d_count == 0);
  CHECK(f.c_count == 1);
  // < t, c1 | t c1 t^-1 = c1^2 >
  CHECK(f.conj_images[0] == Word::single(1, 2));
  CHECK(detect_ascending(f) == AscendingVerdict::SigmaMember);

  const HnnData h = hnn_data(f);
  REQUIRE(h.a_gens.size() == 1);
  CHECK(h.b_gens == h.a_gens);
  REQUIRE(h.alpha_images.size() == 1);
  CHECK(h.alpha_images[0] == Word::single(0, 2));  // alpha(c1) = c1^2 over the B list
}

TEST_CASE("Baumslag-Solitar descending direction stays inconclusive") {
  const Presentation p3 = testsupport::p3_bs12();
  const FakeHnn f = tietze_simplify(magnus_rewrite(p3, Character{{0, -1}}));
  CHECK(f.tietze_converged);
  CHECK(f.d_count == 1);
  CHECK(grank_upper(f) == 1);
  CHECK(detect_ascending(f) == AscendingVerdict::Inconclusive);
}

TEST_CASE("trefoil fibered direction") {
  const Presentation p4 = testsupport::p4_trefoil();
  const FakeHnn raw = magnus_rewrite(p4, Character{{1, 1}});
  CHECK(raw.d_count == 1);
  CHECK(raw.c_count == 2);

  const FakeHnn f = tietze_simplify(raw);
  CHECK(f.d_count == 0);
  CHECK(f.c_count == 2);
  CHECK(f.relators.empty());
  CHECK(detect_ascending(f) == AscendingVerdict::SigmaMember);
  // alpha: c1 -> c2^-1, c2 -> c1 c2
  REQUIRE(f.conj_images.size() == 2);
  CHECK(f.conj_images[0] == Word::single(2, -1));
  CHECK(f.conj_images[1] == multiply(Word::single(1, 1), Word::single(2, 1)));
}

TEST_CASE("free group keeps one d generator") {
  const Presentation p1 = testsupport::p1_free();
  const FakeHnn f = tietze_simplify(magnus_rewrite(p1, Character{{1, 0}}));
  CHECK(f.d_count == 1);
  CHECK(f.c_count == 0);
  CHECK(f.relators.empty());
  CHECK(detect_ascending(f) == AscendingVerdict::Inconclusive);

  const HnnData h = hnn_data(f);
  CHECK(h.a_gens.empty());
  REQUIRE(h.b_gens.size() == 1);
  CHECK(h.b_gens[0] == Word::single(1, 1));  // d1 = b
}

TEST_CASE("free group with coprime non-unit values uses a product stable letter") {
  const Presentation p1 = testsupport::p1_free();
  const FakeHnn raw = magnus_rewrite(p1, Character{{2, 3}});
  raw.validate();
  // s = a^-1 b from the Bezout pair p = -1, q = 1
  CHECK(raw.stable_origin == multiply(Word::single(0, -1), Word::single(1, 1)));
  const FakeHnn f = tietze_simplify(raw);
  CHECK(f.d_count <= 1);
  CHECK(grank_upper(f) <= 1);
}

TEST_CASE("no coprime pair still rewrites") {
  // values (6, 10, 15): pairwise gcds are 2, 3, 5 but the triple is coprime
  const Presentation p({"a", "b", "c"}, {});
  const Character c{{6, 10, 15}};
  const FakeHnn raw = magnus_rewrite(p, c);
  raw.validate();
  CHECK(evaluate(c, raw.stable_origin) == 1);
  const FakeHnn f = tietze_simplify(raw);
  CHECK(f.d_count <= 2);
}

TEST_CASE("preconditions are enforced") {
  const Presentation p2 = testsupport::p2_torus();
  CHECK_THROWS_AS(magnus_rewrite(p2, Character{{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(magnus_rewrite(p2, Character{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(magnus_rewrite(p2, Character{{1}}), std::invalid_argument);
  const Presentation p3 = testsupport::p3_bs12();
  CHECK_THROWS_AS(magnus_rewrite(p3, Character{{1, 0}}), std::invalid_argument);
}

TEST_CASE("simplification fixpoint when every d occurs twice") {
  const Presentation p2 = testsupport::p2_torus();
  FakeHnn f = tietze_simplify(magnus_rewrite(p2, Character{{1, 0}}));
  const FakeHnn again = tietze_simplify(f);
  CHECK(again.d_count == f.d_count);
  CHECK(again.relators == f.relators);
  CHECK(again.conj_images == f.conj_images);
  CHECK(again.tietze_passes == 0);
  CHECK(again.tietze_converged);
}

TEST_CASE("rewriting preserves the abelianization on the corpus") {
  std::mt19937 rng(73);
  for (const char* name : {"p1_free.pres", "p2_torus.pres", "p3_bs12.pres", "p4_trefoil.pres",
                           "p5_genus2.pres"}) {
    const Presentation p = testsupport::load_corpus(name);
    Character c;
    REQUIRE(testsupport::random_valid_character(rng, p, c));
    const AbelianGroup before = abelianization(p);
    const FakeHnn raw = magnus_rewrite(p, c);
    CHECK(abelianization(raw.to_presentation()) == before);
    const FakeHnn f = tietze_simplify(raw);
    CHECK(abelianization(f.to_presentation()) == before);
  }
}

TEST_CASE("rewriting soundness on random presentations") {
  std::mt19937 rng(79);
  int checked = 0;
  while (checked < 120) {
    const Presentation p = testsupport::random_presentation(rng, 3, 2, 8);
    Character c;
    if (!testsupport::random_valid_character(rng, p, c)) continue;
    const AbelianGroup before = abelianization(p);
    const FakeHnn raw = magnus_rewrite(p, c);
    raw.validate();
    CHECK(raw.d_count <= p.generator_count());
    CHECK(abelianization(raw.to_presentation()) == before);

    const FakeHnn f = tietze_simplify(raw);
    f.validate();
    CHECK(f.tietze_converged);
    CHECK(f.d_count <= p.generator_count() - 1);
    CHECK(f.d_count <= raw.d_count);
    CHECK(abelianization(f.to_presentation()) == before);
    ++checked;
  }
}

TEST_CASE("case-1 raw output already satisfies the n-1 bound") {
  std::mt19937 rng(83);
  int checked = 0;
  while (checked < 80) {
    const Presentation p = testsupport::random_presentation(rng, 3, 2, 8);
    Character c;
    if (!testsupport::random_valid_character(rng, p, c)) continue;
    const bool case1 = std::any_of(c.values.begin(), c.values.end(),
                                   [](long long v) { return v == 1 || v == -1; });
    if (!case1) continue;
    CHECK(magnus_rewrite(p, c).d_count <= p.generator_count() - 1);
    ++checked;
  }
}

TEST_CASE("grank upper bound is scale invariant") {
  const Presentation p3 = testsupport::p3_bs12();
  const FakeHnn a = tietze_simplify(magnus_rewrite(p3, primitive(Character{{0, 7}})));
  const FakeHnn b = tietze_simplify(magnus_rewrite(p3, Character{{0, 1}}));
  CHECK(grank_upper(a) == grank_upper(b));
  CHECK(a.relators == b.relators);
  CHECK(a.conj_images == b.conj_images);
}

TEST_CASE("trace records only Tietze step kinds and rebuilds sound names") {
  const FakeHnn f = tietze_simplify(magnus_rewrite(testsupport::p4_trefoil(), Character{{1, 1}}));
  CHECK(!f.trace.empty());
  for (const TietzeStep& s : f.trace) {
    CHECK((s.kind == TietzeStepKind::AddGenerator || s.kind == TietzeStepKind::ReplaceRelator ||
           s.kind == TietzeStepKind::EliminateGenerator ||
           s.kind == TietzeStepKind::RemoveTrivialRelator));
  }
  // origins witness the c generators inside the original group
  REQUIRE(f.c_origin.size() == 2);
  const Character phi{{1, 1}};
  for (const Word& origin : f.c_origin) CHECK(evaluate(phi, origin) == 0);
  CHECK(evaluate(phi, f.stable_origin) == 1);
}
