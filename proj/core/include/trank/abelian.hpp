#pragma once

#include <vector>

#include "trank/character.hpp"
#include "trank/int_matrix.hpp"
#include "trank/presentation.hpp"
#include "trank/smith.hpp"

namespace trank {

/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Entry (k, i) is the exponent sum of generator i in relator k.
IntMatrix relation_matrix(const Presentation& p);

AbelianGroup abelianization(const Presentation& p);

/// A basis of the integer kernel of the relation matrix, read off the Smith
/// decomposition. Each basis vector is primitive and the basis size equals
/// the free rank of the abelianization.
std::vector<Character> character_lattice(const Presentation& p);

}  // namespace trank
