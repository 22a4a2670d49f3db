#include "trank/oracle.hpp"

#include <algorithm>
#include <set>

#include "trank/errors.hpp"

namespace trank {

const char* to_string(OracleKind k) {
  switch (k) {
    case OracleKind::Free: return "free";
    case OracleKind::FreeAbelian: return "abelian";
    case OracleKind::Dehn: return "dehn";
  }
  return "?";
}

namespace {

// Least representative of the cyclic word class of w and w^-1.
std::vector<Letter> cyclic_inversion_class_min(const Word& w) {
  std::vector<Letter> best;
  bool first = true;
  for (const Word& base : {w, invert(w)}) {
    const std::vector<Letter> singles = expand(base);
    for (std::size_t shift = 0; shift < std::max<std::size_t>(singles.size(), 1); ++shift) {
      std::vector<Letter> rot;
      rot.reserve(singles.size());
      for (std::size_t i = 0; i < singles.size(); ++i)
        rot.push_back(singles[(i + shift) % singles.size()]);
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

void validate_oracle(OracleKind kind, const Presentation& p) {
  switch (kind) {
    case OracleKind::Free:
      if (!p.relators().empty())
        throw OracleError("free oracle requires a presentation without relators");
      return;
    case OracleKind::FreeAbelian: {
      const std::size_t n = p.generator_count();
      std::set<std::vector<Letter>> wanted;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Word u = Word::single(static_cast<int>(i), 1);
          const Word v = Word::single(static_cast<int>(j), 1);
          const Word comm = multiply(multiply(u, v), multiply(invert(u), invert(v)));
          wanted.insert(cyclic_inversion_class_min(comm));
        }
      }
      std::set<std::vector<Letter>> have;
      for (const Word& r : p.relators()) have.insert(cyclic_inversion_class_min(r));
      if (have != wanted || p.relators().size() != wanted.size())
        throw OracleError(
            "abelian oracle requires exactly the pairwise commutators as relators");
      return;
    }
    case OracleKind::Dehn:
      if (!verify_small_cancellation(p))
        throw OracleError("dehn oracle requires the presentation to satisfy C'(1/6)");
      return;
  }
}

}  // namespace

Oracle::Oracle(OracleKind kind, const Presentation& p, std::size_t dehn_state_cap)
    : kind_(kind), pres_(p) {
  validate_oracle(kind, p);
  if (kind == OracleKind::Dehn) dehn_ = std::make_shared<const DehnRewriter>(p, dehn_state_cap);
}

Word Oracle::normalize(const Word& w) const {
  if (w.max_gen() >= static_cast<int>(pres_.generator_count()))
    throw std::invalid_argument("word uses a generator outside the oracle's presentation");
  switch (kind_) {
    case OracleKind::Free:
      return w;  // already freely reduced by construction
    case OracleKind::FreeAbelian: {
      std::vector<long long> exps(pres_.generator_count(), 0);
      for (const Letter& l : w.letters()) exps[static_cast<std::size_t>(l.gen)] += l.exp;
      std::vector<Letter> sorted;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) sorted.push_back({static_cast<int>(i), exps[i]});
      }
      return Word::reduce(sorted);
    }
    case OracleKind::Dehn:
      return dehn_->normalize(w);
  }
  return w;
}

}  // namespace trank
