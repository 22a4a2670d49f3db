#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trank {

/// One run of a freely reduced word: generator index with a nonzero exponent.
struct Letter {
  int gen = 0;
  long long exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a free group, stored run-length encoded.
/// Adjacent letters never share a generator index and no exponent is zero;
/// the empty word is the identity.
class Word {
public:
  Word() = default;

  /// Builds the freely reduced word represented by an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word single(int gen, long long exp);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Number of single letters, i.e. the sum of |exponent| over all runs.
  long long length() const;

  /// Largest generator index used, or -1 for the empty word.
  int max_gen() const;
  bool uses_gen(int gen) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Order usable as a map key (length-lexicographic would also work; this is
  /// plain lexicographic on the run encoding).
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, long long e);

/// Decomposes w as conjugator * core * conjugator^-1 with core cyclically
/// reduced (its first and last runs use distinct generators, or it has at
/// most one run).
std::pair<Word, Word> cyclic_reduce(const Word& w);

/// Replaces every occurrence of gen^e in w by r^e, then freely reduces.
Word substitute(const Word& w, int gen, const Word& r);

/// Expands a word into single letters with exponents +-1.
std::vector<Letter> expand(const Word& w);
Word from_single_letters(const std::vector<Letter>& singles);

/// Shortlex order on single-letter expansions; single letters are ordered by
/// generator index with the positive letter before the negative one.
bool shortlex_less(const Word& a, const Word& b);

/// Renders a word in the presentation grammar, e.g. "t a t^-1 a^-2"; the
/// empty word renders as "1".
std::string to_text(const Word& w, std::span<const std::string> names);

}  // namespace trank
