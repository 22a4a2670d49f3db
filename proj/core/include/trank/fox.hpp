#pragma once

#include <map>

#include "trank/character.hpp"
#include "trank/laurent.hpp"
#include "trank/word.hpp"

namespace trank {

/// Element of the integral group ring of a free group: a finite formal sum of
/// freely reduced words with nonzero integer coefficients.
struct FreeGroupRingElement {
  std::map<Word, long long> terms;

  void add(const Word& w, long long coeff);
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const FreeGroupRingElement&, const FreeGroupRingElement&) = default;
};

/// Free differential calculus: d(g)/dg = 1, d(g^-1)/dg = -g^-1, d(h)/dg = 0
/// for h != g, and d(uv)/dg = du/dg + u * dv/dg.
FreeGroupRingElement fox_derivative(const Word& w, int gen);

/// Ring homomorphism sending each word w to t^{evaluate(c, w)}.
LaurentPoly specialize(const FreeGroupRingElement& e, const Character& c);

}  // namespace trank
