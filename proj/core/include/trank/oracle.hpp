#pragma once

#include <memory>

#include "trank/presentation.hpp"
#include "trank/small_cancellation.hpp"
#include "trank/word.hpp"

namespace trank {

enum class OracleKind { Free, FreeAbelian, Dehn };

const char* to_string(OracleKind k);

/// Word-problem backend used to identify Cayley-graph vertices. Construction
/// validates soundness against the presentation and throws OracleError
/// otherwise: Free needs zero relators, FreeAbelian needs the relator set to
/// be exactly all pairwise commutators (up to rotation and inversion), Dehn
/// needs the C'(1/6) verification to pass.
class Oracle {
public:
  Oracle(OracleKind kind, const Presentation& p, std::size_t dehn_state_cap = 10000);

  OracleKind kind() const { return kind_; }
  const Presentation& presentation() const { return pres_; }

  /// Canonical representative of the element of w. Two words map to the same
  /// output iff the oracle proves them equal.
  Word normalize(const Word& w) const;

private:
  OracleKind kind_;
  Presentation pres_;
  std::shared_ptr<const DehnRewriter> dehn_;
};

inline Word normalize(const Oracle& o, const Word& w) { return o.normalize(w); }

}  // namespace trank
