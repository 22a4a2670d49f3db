#include "trank/novikov.hpp"

#include <stdexcept>

#include "trank/fox.hpp"

namespace trank {

BoundaryMatrices boundary_matrices(const Presentation& p, const Character& c) {
  validate_character(p, c);
  if (c.is_zero()) throw std::invalid_argument("boundary matrices need a nonzero character");
  const std::size_t n = p.generator_count();
  const std::size_t m = p.relators().size();
  BoundaryMatrices bm{LaurentMatrix(1, n), LaurentMatrix(n, m)};
  for (std::size_t i = 0; i < n; ++i) {
    bm.d1.at(0, i) = LaurentPoly::term(c.values[i], 1) - LaurentPoly::one();
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      bm.d2.at(i, k) = specialize(fox_derivative(p.relators()[k], static_cast<int>(i)), c);
    }
  }
  return bm;
}

NovikovCertificate novikov_b1_certificate(const Presentation& p, const Character& c) {
  const BoundaryMatrices bm = boundary_matrices(p, c);
  NovikovCertificate cert;
  cert.generators = p.generator_count();
  cert.rank_d1 = laurent_rank(bm.d1);
  cert.rank_d2 = laurent_rank(bm.d2);
  cert.b1 = cert.generators - cert.rank_d1 - cert.rank_d2;
  return cert;
}

std::size_t novikov_b1(const Presentation& p, const Character& c) {
  return novikov_b1_certificate(p, c).b1;
}

RankBounds rank_bounds(const Presentation& p, const Character& c, int max_tietze_passes) {
  validate_character(p, c);
  if (c.is_zero()) throw std::invalid_argument("rank bounds need a nonzero character");
  const Character prim = primitive(c);

  RankBounds rb;
  rb.lower_certificate = novikov_b1_certificate(p, prim);
  rb.lower = rb.lower_certificate.b1;
  rb.upper_certificate = tietze_simplify(magnus_rewrite(p, prim), max_tietze_passes);
  rb.upper = grank_upper(rb.upper_certificate);
  if (rb.lower > rb.upper)
    throw std::logic_error("Novikov lower bound exceeded the rewriting upper bound");
  rb.exact = rb.lower == rb.upper;
  return rb;
}

}  // namespace trank
