#pragma once

#include <string_view>
#include <vector>

#include "trank/presentation.hpp"
#include "trank/word.hpp"

namespace trank {

/// An integral character: the value assigned to each generator of a fixed
/// presentation. A valid character vanishes on every relator.
struct Character {
  std::vector<long long> values;

  bool is_zero() const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Sum over the letters of value(gen) * exponent. Throws on an index outside
/// the character's dimension.
long long evaluate(const Character& c, const Word& w);

/// gcd of the absolute values; 0 only for the zero character.
long long content_gcd(const Character& c);

/// Divides by the gcd, preserving signs. Throws on the zero character.
Character primitive(const Character& c);

/// True iff the image subgroup is all of Z, i.e. the gcd is 1. Throws on the
/// zero character.
bool is_epimorphism_to_Z(const Character& c);

bool vanishes_on_relators(const Presentation& p, const Character& c);

/// Checks dimension and vanishing on relators; throws std::invalid_argument.
void validate_character(const Presentation& p, const Character& c);

/// Parses the inline syntax "a=1,b=0"; every generator must be assigned
/// exactly once. The result is validated against the presentation.
Character parse_character_spec(const Presentation& p, std::string_view spec);

}  // namespace trank
