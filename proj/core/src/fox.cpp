#include "trank/fox.hpp"

namespace trank {

void FreeGroupRingElement::add(const Word& w, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

FreeGroupRingElement fox_derivative(const Word& w, int gen) {
  FreeGroupRingElement out;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      // d(g^e)/dg = 1 + g + ... + g^{e-1} for e > 0,
      //           = -(g^-1 + ... + g^e)   for e < 0.
      if (l.exp > 0) {
        for (long long k = 0; k < l.exp; ++k)
          out.add(multiply(prefix, Word::single(gen, k)), 1);
      } else {
        for (long long k = -1; k >= l.exp; --k)
          out.add(multiply(prefix, Word::single(gen, k)), -1);
      }
    }
    prefix = multiply(prefix, Word::single(l.gen, l.exp));
  }
  return out;
}

LaurentPoly specialize(const FreeGroupRingElement& e, const Character& c) {
  LaurentPoly out;
  for (const auto& [w, coeff] : e.terms) out.add_term(evaluate(c, w), coeff);
  return out;
}

}  // namespace trank
