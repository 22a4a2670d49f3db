#include "trank/word.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace trank {

Word Word::reduce(std::span<const Letter> raw) {
  Word out;
  for (const Letter& l : raw) {
    if (l.exp == 0) continue;
    if (!out.letters_.empty() && out.letters_.back().gen == l.gen) {
      out.letters_.back().exp += l.exp;
      if (out.letters_.back().exp == 0) out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Word Word::single(int gen, long long exp) {
  Word out;
  if (exp != 0) out.letters_.push_back({gen, exp});
  return out;
}

long long Word::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += std::llabs(l.exp);
  return n;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

bool Word::uses_gen(int gen) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [gen](const Letter& l) { return l.gen == gen; });
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : raw) l.exp = -l.exp;
  return Word::reduce(raw);
}

Word power(const Word& w, long long e) {
  if (e == 0 || w.empty()) return Word();
  Word base = e > 0 ? w : invert(w);
  long long reps = e > 0 ? e : -e;
  if (base.size() == 1) {
    const Letter& l = base.letters().front();
    return Word::single(l.gen, l.exp * reps);
  }
  Word out;
  for (long long i = 0; i < reps; ++i) out = multiply(out, base);
  return out;
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  std::vector<Letter> core = w.letters();
  std::vector<Letter> conj;
  while (core.size() >= 2 && core.front().gen == core.back().gen) {
    Letter first = core.front();
    Letter last = core.back();
    conj.push_back(first);
    core.erase(core.begin());
    core.pop_back();
    long long merged = first.exp + last.exp;
    if (merged != 0) {
      // The middle cannot end with this generator, so no cascade.
      core.push_back({first.gen, merged});
      break;
    }
  }
  return {Word::reduce(core), Word::reduce(conj)};
}

Word substitute(const Word& w, int gen, const Word& r) {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters()) {
    if (l.gen != gen) {
      raw.push_back(l);
      continue;
    }
    const Word rep = power(r, l.exp);
    raw.insert(raw.end(), rep.letters().begin(), rep.letters().end());
  }
  return Word::reduce(raw);
}

std::vector<Letter> expand(const Word& w) {
  std::vector<Letter> singles;
  for (const Letter& l : w.letters()) {
    long long sign = l.exp > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(l.exp); ++i) singles.push_back({l.gen, sign});
  }
  return singles;
}

Word from_single_letters(const std::vector<Letter>& singles) { return Word::reduce(singles); }

namespace {
// Positive letter sorts before the negative one of the same generator.
bool single_letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.exp > b.exp;
}
}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
  const long long la = a.length();
  const long long lb = b.length();
  if (la != lb) return la < lb;
  const std::vector<Letter> sa = expand(a);
  const std::vector<Letter> sb = expand(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) return single_letter_less(sa[i], sb[i]);
  }
  return false;
}

std::string to_text(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
      throw std::out_of_range("generator index out of range while printing word");
    out += names[static_cast<std::size_t>(l.gen)];
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

}  // namespace trank
