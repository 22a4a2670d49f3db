#pragma once

#include <string>
#include <vector>

#include "trank/character.hpp"
#include "trank/presentation.hpp"
#include "trank/word.hpp"

namespace trank {

enum class TietzeStepKind {
  AddGenerator,         // new generator with a defining relation
  ReplaceRelator,       // relator replaced by an equivalent one
  EliminateGenerator,   // generator removed by substituting a word for it
  RemoveTrivialRelator  // relator that reduced to the empty word dropped
};

const char* to_string(TietzeStepKind k);

/// One audit record. Words are rendered with the generator names that were
/// live when the step happened.
struct TietzeStep {
  TietzeStepKind kind;
  std::string name;       // generator involved (add / eliminate)
  std::string word_text;  // defining word / substitution / new relator value
  int relator_index = -1;

  friend bool operator==(const TietzeStep&, const TietzeStep&) = default;
};

/// A presentation of the shape
///
///   < s, d_1..d_p, c_1..c_q | r_k(d, c) = 1,  s c_j s^-1 = w_j(d, c) >
///
/// with the extended character sending s to 1 and every d, c to 0. Words are
/// indexed over [0] = stable, [1..d_count] = d block, then the c block.
/// The origin words express each generator in the input presentation's
/// generators, letter for letter along the recorded Tietze steps.
struct FakeHnn {
  std::vector<std::string> names;  // [stable, d..., c...]
  std::size_t d_count = 0;
  std::size_t c_count = 0;
  std::vector<Word> relators;     // s-free, cyclically reduced, over `names`
  std::vector<Word> conj_images;  // w_j per c generator, s-free
  Character chi;                  // (1, 0, ..., 0)
  std::vector<TietzeStep> trace;

  Word stable_origin;
  std::vector<Word> d_origin;
  std::vector<Word> c_origin;

  int tietze_passes = 0;
  bool tietze_converged = true;

  int stable_index() const { return 0; }
  bool is_d(int idx) const { return idx >= 1 && idx <= static_cast<int>(d_count); }
  bool is_c(int idx) const { return idx > static_cast<int>(d_count); }

  /// Plain presentation with the conjugation relations materialised as
  /// relators s c_j s^-1 w_j^-1.
  Presentation to_presentation() const;

  /// Checks every structural invariant; throws std::logic_error on failure.
  void validate() const;
};

/// Converts (presentation, primitive character) into fake-HNN form by Magnus
/// rewriting. When some generator has character value +-1 it becomes the
/// stable letter (lowest index wins) and the raw output has at most n-1
/// d generators. Otherwise a product s with character value 1 is formed from
/// a coprime pair (lowest pair, Bezout coefficients normalised to minimal |p|
/// with ties at p >= 0), falling back to more factors when no pair of values
/// is coprime; all n replacement generators start in the d block and
/// simplification is expected to retire at least one.
/// Requires gcd(values) == 1 and vanishing on all relators.
FakeHnn magnus_rewrite(const Presentation& p, const Character& c);

/// Repeatedly eliminates a d generator that occurs exactly once, with
/// exponent +-1, in some s-free relator; first such relator and position win.
/// d generators only ever leave, so the fake-HNN shape is preserved.
FakeHnn tietze_simplify(const FakeHnn& f, int max_passes = 100);

/// Number of d generators: adding them to A = <c_j> generates B, so this
/// witnesses an upper bound for the rank of the class.
std::size_t grank_upper(const FakeHnn& f);

enum class AscendingVerdict { SigmaMember, Inconclusive };

const char* to_string(AscendingVerdict v);

/// SigmaMember exactly when no d generators remain (A = B, an ascending HNN
/// extension, which certifies membership in Sigma). A leftover d generator
/// proves nothing.
AscendingVerdict detect_ascending(const FakeHnn& f);

/// HNN splitting data G = < stable, B | A = stable^-1 alpha(A) stable >.
/// A and B generators are words in the input presentation's generators;
/// alpha images are words over the B generator list (d block first).
struct HnnData {
  Word stable;
  std::vector<Word> a_gens;
  std::vector<Word> b_gens;
  std::vector<Word> alpha_images;
};

HnnData hnn_data(const FakeHnn& f);

}  // namespace trank
