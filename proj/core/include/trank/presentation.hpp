#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trank/word.hpp"

namespace trank {

/// A finite group presentation. Generator names are unique and nonempty;
/// relators are stored cyclically reduced (replacing a relator by a conjugate
/// does not change the group).
class Presentation {
public:
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// Index of a generator name, or -1 when absent.
  int generator_index(std::string_view name) const;

  /// Canonical text form, e.g. "<a, t | t a t^-1 a^-2>"; re-parsing it yields
  /// an identical presentation.
  std::string to_text() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

}  // namespace trank
