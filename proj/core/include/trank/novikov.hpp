#pragma once

#include "trank/character.hpp"
#include "trank/laurent.hpp"
#include "trank/magnus.hpp"
#include "trank/presentation.hpp"

namespace trank {

/// Boundary maps of the presentation 2-complex with coefficients twisted
/// along the character: d1 is 1 x n with entries t^{phi(g_i)} - 1, d2 is
/// n x m with entry (i, k) the specialised Fox derivative of relator k by
/// generator i. Row identity: d1 * d2 = 0.
struct BoundaryMatrices {
  LaurentMatrix d1;
  LaurentMatrix d2;
};

BoundaryMatrices boundary_matrices(const Presentation& p, const Character& c);

/// How a Novikov Betti number was obtained: b1 = generators - rank d1 - rank d2,
/// with both ranks taken over the rational function field in t.
struct NovikovCertificate {
  std::size_t generators = 0;
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;
  std::size_t b1 = 0;
};

NovikovCertificate novikov_b1_certificate(const Presentation& p, const Character& c);

/// First Novikov Betti number of the class; a certified lower bound for the
/// rank of the class (torsion contributions are nonnegative and dropped).
std::size_t novikov_b1(const Presentation& p, const Character& c);

/// Certified bracket around the rank of a rational class: b1 from below,
/// the simplified d-generator count from above.
struct RankBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  NovikovCertificate lower_certificate;
  FakeHnn upper_certificate;
};

RankBounds rank_bounds(const Presentation& p, const Character& c, int max_tietze_passes = 100);

}  // namespace trank
