#include "trank/abelian.hpp"

#include <limits>
#include <stdexcept>

namespace trank {

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    for (const Letter& l : p.relators()[k].letters())
      m.at(k, static_cast<std::size_t>(l.gen)) += l.exp;
  }
  return m;
}

AbelianGroup abelianization(const Presentation& p) {
  const SmithResult s = smith_normal_form(relation_matrix(p));
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const BigInt& d : smith_diagonal(s)) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = p.generator_count() - nonzero;
  return g;
}

std::vector<Character> character_lattice(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  const SmithResult s = smith_normal_form(m);
  const std::size_t n = p.generator_count();
  const std::size_t diag = std::min(s.D.rows(), s.D.cols());

  std::vector<Character> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (j < diag && s.D.at(j, j) != 0) continue;
    // Column j of V spans a kernel direction: m * V e_j = U^-1 * D e_j = 0.
    Character c;
    c.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& v = s.V.at(i, j);
      if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("kernel basis entry does not fit in 64 bits");
      c.values.push_back(static_cast<long long>(v));
    }
    basis.push_back(std::move(c));
  }
  return basis;
}

}  // namespace trank
