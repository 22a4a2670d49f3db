#include "trank/small_cancellation.hpp"

#include <algorithm>
#include <set>

#include "trank/errors.hpp"

namespace trank {

namespace {

// All cyclic rotations of the single-letter expansions of r and r^-1, tagged
// with the source relator length.
struct Rotation {
  std::vector<Letter> letters;
  std::size_t source_len;
  std::size_t source_index;
};

std::vector<Rotation> symmetrized_rotations(const Presentation& p) {
  std::vector<Rotation> out;
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    const Word& r = p.relators()[k];
    if (r.empty()) continue;
    for (const Word& base : {r, invert(r)}) {
      const std::vector<Letter> singles = expand(base);
      for (std::size_t shift = 0; shift < singles.size(); ++shift) {
        Rotation rot;
        rot.letters.reserve(singles.size());
        for (std::size_t i = 0; i < singles.size(); ++i)
          rot.letters.push_back(singles[(i + shift) % singles.size()]);
        rot.source_len = singles.size();
        rot.source_index = k;
        out.push_back(std::move(rot));
      }
    }
  }
  return out;
}

std::size_t common_prefix(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

bool verify_small_cancellation(const Presentation& p, long long lambda_num,
                               long long lambda_den) {
  const std::vector<Rotation> rots = symmetrized_rotations(p);
  for (std::size_t i = 0; i < rots.size(); ++i) {
    for (std::size_t j = i + 1; j < rots.size(); ++j) {
      if (rots[i].letters == rots[j].letters && rots[i].source_index == rots[j].source_index)
        continue;  // the same element of the symmetrised set
      const std::size_t piece = common_prefix(rots[i].letters, rots[j].letters);
      if (piece == 0) continue;
      // piece < lambda * |r| for both source relators, checked exactly.
      const auto len = static_cast<long long>(piece);
      if (len * lambda_den >= lambda_num * static_cast<long long>(rots[i].source_len))
        return false;
      if (len * lambda_den >= lambda_num * static_cast<long long>(rots[j].source_len))
        return false;
    }
  }
  return true;
}

DehnRewriter::DehnRewriter(const Presentation& p, std::size_t state_cap)
    : state_cap_(state_cap) {
  std::set<std::vector<Letter>> seen;
  for (const Rotation& rot : symmetrized_rotations(p)) {
    if (!seen.insert(rot.letters).second) continue;
    const std::size_t len = rot.letters.size();
    // Split the rotation as pattern * tail; pattern == tail^-1 in the group.
    for (std::size_t cut = len; 2 * cut >= len; --cut) {
      Rule rule;
      rule.pattern.assign(rot.letters.begin(),
                          rot.letters.begin() + static_cast<std::ptrdiff_t>(cut));
      std::vector<Letter> tail(rot.letters.begin() + static_cast<std::ptrdiff_t>(cut),
                               rot.letters.end());
      std::reverse(tail.begin(), tail.end());
      for (Letter& l : tail) l.exp = -l.exp;
      rule.replacement = std::move(tail);
      if (2 * cut > len)
        shrinking_.push_back(std::move(rule));
      else
        swapping_.push_back(std::move(rule));
      if (cut == 0) break;
    }
  }
}

namespace {

std::vector<Letter> freely_reduce(const std::vector<Letter>& singles) {
  return expand(Word::reduce(singles));
}

bool matches_at(const std::vector<Letter>& w, std::size_t pos, const std::vector<Letter>& pat) {
  if (pos + pat.size() > w.size()) return false;
  for (std::size_t i = 0; i < pat.size(); ++i) {
    if (w[pos + i] != pat[i]) return false;
  }
  return true;
}

std::vector<Letter> splice(const std::vector<Letter>& w, std::size_t pos, std::size_t len,
                           const std::vector<Letter>& repl) {
  std::vector<Letter> out;
  out.reserve(w.size() - len + repl.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
  return freely_reduce(out);
}

}  // namespace

bool DehnRewriter::apply_shrinking(std::vector<Letter>& singles) const {
  for (std::size_t pos = 0; pos < singles.size(); ++pos) {
    for (const Rule& rule : shrinking_) {
      if (matches_at(singles, pos, rule.pattern)) {
        singles = splice(singles, pos, rule.pattern.size(), rule.replacement);
        return true;
      }
    }
  }
  return false;
}

Word DehnRewriter::normalize(const Word& w) const {
  std::vector<Letter> current = expand(w);
  while (apply_shrinking(current)) {
  }

  // Closure of the Dehn-irreducible word under non-lengthening rewrites; a
  // strictly shorter find restarts the closure from that word.
  std::set<std::vector<Letter>> visited;
  std::vector<std::vector<Letter>> frontier{current};
  visited.insert(current);
  std::size_t min_len = current.size();
  while (!frontier.empty()) {
    std::vector<std::vector<Letter>> next;
    for (const std::vector<Letter>& word : frontier) {
      for (const Rule& rule : swapping_) {
        for (std::size_t pos = 0; pos + rule.pattern.size() <= word.size(); ++pos) {
          if (!matches_at(word, pos, rule.pattern)) continue;
          std::vector<Letter> candidate = splice(word, pos, rule.pattern.size(), rule.replacement);
          while (apply_shrinking(candidate)) {
          }
          if (candidate.size() < min_len) {
            // Shorter representative: restart from scratch.
            min_len = candidate.size();
            visited.clear();
            visited.insert(candidate);
            next.clear();
            next.push_back(std::move(candidate));
            goto restart;
          }
          if (candidate.size() == min_len && visited.insert(candidate).second) {
            if (visited.size() > state_cap_)
              throw CapError("Dehn normalisation exceeded the rewriting state cap");
            next.push_back(std::move(candidate));
          }
        }
      }
    }
  restart:
    frontier = std::move(next);
  }

  const std::vector<Letter>* best = nullptr;
  Word best_word;
  for (const std::vector<Letter>& cand : visited) {
    Word cw = from_single_letters(cand);
    if (best == nullptr || shortlex_less(cw, best_word)) {
      best = &cand;
      best_word = std::move(cw);
    }
  }
  return best_word;
}

}  // namespace trank
