#include "trank/character.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trank {

bool Character::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v == 0; });
}

long long evaluate(const Character& c, const Word& w) {
  long long sum = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= c.values.size())
      throw std::invalid_argument("word and character dimensions do not match");
    sum += c.values[static_cast<std::size_t>(l.gen)] * l.exp;
  }
  return sum;
}

long long content_gcd(const Character& c) {
  long long g = 0;
  for (long long v : c.values) g = std::gcd(g, v);
  return g;
}

Character primitive(const Character& c) {
  const long long g = content_gcd(c);
  if (g == 0) throw std::invalid_argument("the zero character has no primitive form");
  Character out = c;
  for (long long& v : out.values) v /= g;
  return out;
}

bool is_epimorphism_to_Z(const Character& c) {
  const long long g = content_gcd(c);
  if (g == 0) throw std::invalid_argument("the zero character is not a homomorphism onto Z");
  return g == 1;
}

bool vanishes_on_relators(const Presentation& p, const Character& c) {
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return evaluate(c, r) == 0; });
}

void validate_character(const Presentation& p, const Character& c) {
  if (c.values.size() != p.generator_count())
    throw std::invalid_argument("character dimension does not match the generator count");
  if (!vanishes_on_relators(p, c))
    throw std::invalid_argument("character does not vanish on every relator");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0)
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0)
    s.remove_suffix(1);
  return s;
}

}  // namespace

Character parse_character_spec(const Presentation& p, std::string_view spec) {
  Character c;
  c.values.assign(p.generator_count(), 0);
  std::vector<bool> assigned(p.generator_count(), false);

  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = trim(spec.substr(start, end - start));
    if (item.empty())
      throw std::invalid_argument("empty assignment in character spec '" + std::string(spec) + "'");
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("expected '=' in character assignment '" + std::string(item) + "'");
    const std::string_view name = trim(item.substr(0, eq));
    const std::string_view value = trim(item.substr(eq + 1));
    const int gen = p.generator_index(name);
    if (gen < 0)
      throw std::invalid_argument("unknown generator '" + std::string(name) + "' in character spec");
    if (assigned[static_cast<std::size_t>(gen)])
      throw std::invalid_argument("generator '" + std::string(name) + "' assigned twice");
    long long v = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size())
      throw std::invalid_argument("invalid integer '" + std::string(value) + "' in character spec");
    c.values[static_cast<std::size_t>(gen)] = v;
    assigned[static_cast<std::size_t>(gen)] = true;
    if (end == spec.size()) break;
    start = end + 1;
  }
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i])
      throw std::invalid_argument("generator '" + p.generators()[i] + "' missing from character spec");
  }
  validate_character(p, c);
  return c;
}

}  // namespace trank
