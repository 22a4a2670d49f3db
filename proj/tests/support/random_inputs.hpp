#pragma once

#include <random>
#include <vector>

#include "trank/abelian.hpp"
#include "trank/character.hpp"
#include "trank/int_matrix.hpp"
#include "trank/laurent.hpp"
#include "trank/presentation.hpp"
#include "trank/word.hpp"

namespace testsupport {

using Rng = std::mt19937;

inline trank::Word random_raw_word(Rng& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, gens - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<trank::Letter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    letters.push_back({gen_dist(rng), sign_dist(rng) == 0 ? 1LL : -1LL});
  return trank::Word::reduce(letters);
}

inline trank::Word random_reduced_word(Rng& rng, int gens, int exact_len) {
  std::uniform_int_distribution<int> gen_dist(0, gens - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<trank::Letter> letters;
  while (true) {
    const trank::Letter cand{gen_dist(rng), sign_dist(rng) == 0 ? 1LL : -1LL};
    if (!letters.empty() && letters.back().gen == cand.gen &&
        letters.back().exp + cand.exp == 0)
      continue;
    letters.push_back(cand);
    if (static_cast<int>(letters.size()) == exact_len) break;
  }
  return trank::Word::reduce(letters);
}

inline trank::Presentation random_presentation(Rng& rng, int max_gens, int max_relators,
                                               int max_len) {
  std::uniform_int_distribution<int> gen_dist(1, max_gens);
  std::uniform_int_distribution<int> rel_dist(0, max_relators);
  const int gens = gen_dist(rng);
  std::vector<std::string> names;
  for (int i = 0; i < gens; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<trank::Word> relators;
  const int rels = rel_dist(rng);
  for (int k = 0; k < rels; ++k) relators.push_back(random_raw_word(rng, gens, max_len));
  return trank::Presentation(names, relators);
}

/// Random primitive character vanishing on all relators, or nullopt-like
/// empty when the kernel lattice is trivial.
inline bool random_valid_character(Rng& rng, const trank::Presentation& p,
                                   trank::Character& out) {
  const std::vector<trank::Character> basis = trank::character_lattice(p);
  if (basis.empty()) return false;
  std::uniform_int_distribution<long long> coeff(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    trank::Character c;
    c.values.assign(p.generator_count(), 0);
    for (const trank::Character& b : basis) {
      const long long k = coeff(rng);
      for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += k * b.values[i];
    }
    if (c.is_zero()) continue;
    out = trank::primitive(c);
    return true;
  }
  return false;
}

inline trank::IntMatrix random_int_matrix(Rng& rng, std::size_t max_dim, int max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  trank::IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

inline trank::LaurentPoly random_laurent(Rng& rng, int max_terms, int exp_span, int max_abs) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<long long> exp(-exp_span, exp_span);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  trank::LaurentPoly p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p.add_term(exp(rng), coeff(rng));
  return p;
}

inline trank::LaurentMatrix random_laurent_matrix(Rng& rng, std::size_t max_dim, int exp_span,
                                                  int max_abs) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  trank::LaurentMatrix m(dim(rng), dim(rng));
  for (trank::LaurentPoly& e : m.entries) e = random_laurent(rng, 3, exp_span / 2, max_abs);
  return m;
}

}  // namespace testsupport
