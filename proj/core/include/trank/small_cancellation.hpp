#pragma once

#include <cstddef>
#include <vector>

#include "trank/presentation.hpp"
#include "trank/word.hpp"

namespace trank {

/// Metric small cancellation check C'(lambda) with lambda = num/den.
/// A piece is a maximal common prefix of two distinct cyclic rotations of the
/// symmetrised relators (relators and their inverses). Returns true iff every
/// piece is shorter than lambda times the length of each relator it occurs
/// in; vacuously true without (nontrivial) relators.
bool verify_small_cancellation(const Presentation& p, long long lambda_num = 1,
                               long long lambda_den = 6);

/// Word rewriting for a verified C'(1/6) presentation.
///
/// Canonical form: greedy Dehn reduction (replace any subword that is more
/// than half of a symmetrised relator by the shorter complement), then a
/// bounded closure under the length-preserving half-relator swaps, and
/// finally the shortlex-least word of minimal length. Trivial elements reach
/// the empty word. The closure aborts with CapError past `state_cap` words.
class DehnRewriter {
public:
  explicit DehnRewriter(const Presentation& p, std::size_t state_cap = 10000);

  Word normalize(const Word& w) const;

private:
  struct Rule {
    std::vector<Letter> pattern;      // subword to find
    std::vector<Letter> replacement;  // complement, strictly or equally long
  };

  bool apply_shrinking(std::vector<Letter>& singles) const;

  std::vector<Rule> shrinking_;  // |pattern| > |replacement|
  std::vector<Rule> swapping_;   // |pattern| == |replacement|
  std::size_t state_cap_;
};

}  // namespace trank
