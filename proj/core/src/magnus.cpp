#include "trank/magnus.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace trank {

const char* to_string(TietzeStepKind k) {
  switch (k) {
    case TietzeStepKind::AddGenerator: return "add-generator";
    case TietzeStepKind::ReplaceRelator: return "replace-relator";
    case TietzeStepKind::EliminateGenerator: return "eliminate-generator";
    case TietzeStepKind::RemoveTrivialRelator: return "remove-trivial-relator";
  }
  return "?";
}

const char* to_string(AscendingVerdict v) {
  return v == AscendingVerdict::SigmaMember ? "sigma-member" : "inconclusive";
}

Presentation FakeHnn::to_presentation() const {
  std::vector<Word> all = relators;
  for (std::size_t j = 0; j < c_count; ++j) {
    const int c_idx = static_cast<int>(1 + d_count + j);
    Word rel = multiply(Word::single(0, 1), Word::single(c_idx, 1));
    rel = multiply(rel, Word::single(0, -1));
    rel = multiply(rel, invert(conj_images[j]));
    all.push_back(rel);
  }
  return Presentation(names, all);
}

void FakeHnn::validate() const {
  auto fail = [](const std::string& m) { throw std::logic_error("invalid FakeHnn: " + m); };
  if (names.size() != 1 + d_count + c_count) fail("name count mismatch");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    fail("generator names not unique");
  if (conj_images.size() != c_count) fail("conjugation image count mismatch");
  if (d_origin.size() != d_count || c_origin.size() != c_count) fail("origin count mismatch");
  if (chi.values.size() != names.size()) fail("character dimension mismatch");
  if (chi.values[0] != 1) fail("stable letter must have character value 1");
  for (std::size_t i = 1; i < chi.values.size(); ++i) {
    if (chi.values[i] != 0) fail("d and c generators must have character value 0");
  }
  const int n = static_cast<int>(names.size());
  for (const Word& r : relators) {
    if (r.uses_gen(0)) fail("relator contains the stable letter");
    if (r.max_gen() >= n) fail("relator index out of range");
    if (evaluate(chi, r) != 0) fail("character does not vanish on a relator");
  }
  for (const Word& w : conj_images) {
    if (w.uses_gen(0)) fail("conjugation image contains the stable letter");
    if (w.max_gen() >= n) fail("conjugation image index out of range");
    if (evaluate(chi, w) != 0) fail("character does not vanish on a conjugation image");
  }
  // Full conjugation relators s c_j s^-1 w_j^-1 must also vanish.
  const Presentation whole = to_presentation();
  if (!vanishes_on_relators(whole, chi)) fail("character does not vanish on a conjugation relator");
}

std::size_t grank_upper(const FakeHnn& f) { return f.d_count; }

AscendingVerdict detect_ascending(const FakeHnn& f) {
  return f.d_count == 0 ? AscendingVerdict::SigmaMember : AscendingVerdict::Inconclusive;
}

HnnData hnn_data(const FakeHnn& f) {
  HnnData h;
  h.stable = f.stable_origin;
  h.a_gens = f.c_origin;
  h.b_gens = f.d_origin;
  h.b_gens.insert(h.b_gens.end(), f.c_origin.begin(), f.c_origin.end());
  h.alpha_images.reserve(f.c_count);
  for (const Word& w : f.conj_images) {
    // Shift from FakeHnn indices (stable at 0) to B-list indices (d block at 0).
    std::vector<Letter> shifted = w.letters();
    for (Letter& l : shifted) l.gen -= 1;
    h.alpha_images.push_back(Word::reduce(shifted));
  }
  return h;
}

namespace {

enum class Role { Original, Stable, D, C };

// Mutable presentation state threaded through the rewriting steps.
struct Builder {
  std::vector<std::string> names;
  std::vector<Word> origin;  // in the input presentation's generators
  std::vector<long long> phi;
  std::vector<Role> role;
  std::vector<bool> alive;
  std::vector<Word> relators;
  std::vector<int> conj_owner;     // c generator index per conjugation relation
  std::vector<Word> conj_images;   // parallel to conj_owner
  std::vector<TietzeStep> trace;

  std::vector<std::string> live_names() const {
    std::vector<std::string> out(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      out[i] = alive[i] ? names[i] : "<dead:" + names[i] + ">";
    return out;
  }

  std::string render(const Word& w) const { return to_text(w, live_names()); }

  int add_generator(std::string name, Word origin_word, long long value, Role r,
                    const Word& defining) {
    // Keep names unique against everything ever introduced.
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    const int idx = static_cast<int>(names.size());
    trace.push_back({TietzeStepKind::AddGenerator, name, render(defining), -1});
    names.push_back(std::move(name));
    origin.push_back(std::move(origin_word));
    phi.push_back(value);
    role.push_back(r);
    alive.push_back(true);
    // Defining relation new^-1 * defining joins the relator list.
    relators.push_back(multiply(Word::single(idx, -1), defining));
    return idx;
  }

  void normalize_relators() {
    for (std::size_t k = 0; k < relators.size();) {
      relators[k] = cyclic_reduce(relators[k]).first;
      if (relators[k].empty()) {
        trace.push_back({TietzeStepKind::RemoveTrivialRelator, "", "", static_cast<int>(k)});
        relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
  }

  void eliminate(int gen, const Word& replacement) {
    trace.push_back(
        {TietzeStepKind::EliminateGenerator, names[static_cast<std::size_t>(gen)],
         render(replacement), -1});
    for (Word& r : relators) r = substitute(r, gen, replacement);
    for (Word& w : conj_images) w = substitute(w, gen, replacement);
    alive[static_cast<std::size_t>(gen)] = false;
    normalize_relators();
  }
};

long long sign_of(long long v) { return v >= 0 ? 1 : -1; }

// Bezout coefficients p*a + q*b = 1 for coprime a, b, with |p| minimal and
// ties broken by p >= 0.
std::pair<long long, long long> bezout_minimal(long long a, long long b) {
  long long old_r = a, r = b;
  long long old_p = 1, pp = 0;
  while (r != 0) {
    const long long quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_p = std::exchange(pp, old_p - quot * pp);
  }
  // old_r = +-1; scale so the combination equals +1.
  long long p = old_p * old_r;  // old_r in {1, -1}
  // Solutions are p + k*b; minimise |p|.
  const long long step = std::abs(b);
  p %= step;
  if (p > step / 2) p -= step;
  if (p < -step / 2) p += step;
  if (2 * std::abs(p) == step && p < 0) p = -p;  // tie: prefer p >= 0
  const long long q = (1 - p * a) / b;
  return {p, q};
}

// The stable-letter word Prod g_i^{p_i} with character value 1. Prefers the
// lexicographically first coprime pair of values; falls back to accumulating
// gcds across more generators when no pair of values is coprime.
Word stable_letter_combination(const Character& c) {
  const std::size_t n = c.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long a = c.values[i];
      const long long b = c.values[j];
      if (a == 0 || b == 0 || std::gcd(a, b) != 1) continue;
      const auto [p, q] = bezout_minimal(a, b);
      return multiply(Word::single(static_cast<int>(i), p),
                      Word::single(static_cast<int>(j), q));
    }
  }
  // No coprime pair, e.g. values (6, 10, 15). Fold generators in index order.
  long long g = 0;
  std::vector<long long> coeff(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const long long v = c.values[i];
    if (v == 0) continue;
    if (g == 0) {
      g = std::abs(v);
      coeff[i] = sign_of(v);
      continue;
    }
    if (std::abs(v) % g == 0) continue;
    const long long g2 = std::gcd(g, v);
    // x*(g/g2)*g2 + y*(v/g2)*g2 = g2
    const auto [x, y] = bezout_minimal(g / g2, v / g2);
    for (long long& e : coeff) e *= x;
    coeff[i] = y;
    g = g2;
    if (g == 1) break;
  }
  if (g != 1) throw std::invalid_argument("character is not an epimorphism onto Z");
  Word s;
  for (std::size_t i = 0; i < n; ++i)
    s = multiply(s, Word::single(static_cast<int>(i), coeff[i]));
  return s;
}

// First cyclic position whose letter is stable^-1 and whose following maximal
// stable-free block ends at a stable^+1 letter. Returns the single-letter
// positions of the bracketing stable letters.
bool find_conjugation_window(const std::vector<Letter>& singles, int stable,
                             std::size_t& neg_pos, std::size_t& pos_pos) {
  const std::size_t L = singles.size();
  for (std::size_t i = 0; i < L; ++i) {
    if (singles[i].gen != stable || singles[i].exp != -1) continue;
    std::size_t j = (i + 1) % L;
    while (j != i && singles[j].gen != stable) j = (j + 1) % L;
    if (j == i) return false;  // only one stable letter: cannot happen at exp sum 0
    if (singles[j].exp == 1) {
      neg_pos = i;
      pos_pos = j;
      return true;
    }
  }
  return false;
}

}  // namespace

FakeHnn magnus_rewrite(const Presentation& p, const Character& c) {
  if (c.values.size() != p.generator_count())
    throw std::invalid_argument("character dimension does not match the generator count");
  if (c.is_zero()) throw std::invalid_argument("character must be nonzero");
  if (content_gcd(c) != 1)
    throw std::invalid_argument(
        "character must be primitive (an epimorphism onto Z); apply primitive() first");
  if (!vanishes_on_relators(p, c))
    throw std::invalid_argument("character does not vanish on every relator");

  const std::size_t n = p.generator_count();
  Builder b;
  b.names = p.generators();
  b.phi.assign(c.values.begin(), c.values.end());
  b.role.assign(n, Role::Original);
  b.alive.assign(n, true);
  b.relators = p.relators();
  b.origin.reserve(n);
  for (std::size_t i = 0; i < n; ++i) b.origin.push_back(Word::single(static_cast<int>(i), 1));

  // Locate a generator with value +-1; otherwise build the stable letter as a
  // product with value 1.
  int unit_gen = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.values[i] == 1 || c.values[i] == -1) {
      unit_gen = static_cast<int>(i);
      break;
    }
  }

  Word stable_def;  // over the original generators
  if (unit_gen >= 0) {
    stable_def = Word::single(unit_gen, sign_of(c.values[static_cast<std::size_t>(unit_gen)]));
  } else {
    stable_def = stable_letter_combination(c);
  }
  const int s_idx = b.add_generator("s", stable_def, 1, Role::Stable, stable_def);

  // Replacement generators g_i * s^-phi(g_i) for the zero-value block.
  std::vector<int> block_of(n, -1);
  int d_serial = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == unit_gen) continue;
    const Word def = multiply(Word::single(static_cast<int>(i), 1), Word::single(s_idx, -c.values[i]));
    const Word origin = multiply(Word::single(static_cast<int>(i), 1), power(stable_def, -c.values[i]));
    block_of[i] = b.add_generator("d" + std::to_string(++d_serial), origin, 0, Role::D, def);
  }

  // Retire the original generators: g_i = d_i * s^phi(g_i) (or s^+-1 itself).
  for (std::size_t i = 0; i < n; ++i) {
    Word replacement;
    if (static_cast<int>(i) == unit_gen) {
      replacement = Word::single(s_idx, sign_of(c.values[i]));
    } else {
      replacement = multiply(Word::single(block_of[i], 1), Word::single(s_idx, c.values[i]));
    }
    b.eliminate(static_cast<int>(i), replacement);
  }

  // Introduce c generators until every relator is free of the stable letter.
  // Each replacement consumes one stable/anti-stable pair, so the count of
  // stable letters across relators strictly decreases.
  const auto stable_letter_count = [&]() {
    long long count = 0;
    for (const Word& r : b.relators) {
      for (const Letter& l : r.letters()) {
        if (l.gen == s_idx) count += l.exp > 0 ? l.exp : -l.exp;
      }
    }
    return count;
  };
  long long stable_letters = stable_letter_count();
  int c_serial = 0;
  for (;;) {
    std::size_t target = b.relators.size();
    for (std::size_t k = 0; k < b.relators.size(); ++k) {
      if (b.relators[k].uses_gen(s_idx)) {
        target = k;
        break;
      }
    }
    if (target == b.relators.size()) break;

    const std::vector<Letter> singles = expand(b.relators[target]);
    std::size_t neg_pos = 0, pos_pos = 0;
    if (!find_conjugation_window(singles, s_idx, neg_pos, pos_pos))
      throw std::logic_error("no conjugation window in a relator with stable letters");

    // Block strictly between the bracketing letters (cyclically).
    std::vector<Letter> block;
    for (std::size_t i = (neg_pos + 1) % singles.size(); i != pos_pos;
         i = (i + 1) % singles.size())
      block.push_back(singles[i]);
    const Word window_word = from_single_letters(block);

    // New generator c with defining relation c = s^-1 w s, recorded as the
    // conjugation relation s c s^-1 = w.
    Word def = multiply(Word::single(s_idx, -1), multiply(window_word, Word::single(s_idx, 1)));
    Word window_origin;
    for (const Letter& l : window_word.letters())
      window_origin =
          multiply(window_origin, power(b.origin[static_cast<std::size_t>(l.gen)], l.exp));
    const Word origin =
        multiply(multiply(invert(b.origin[static_cast<std::size_t>(s_idx)]), window_origin),
                 b.origin[static_cast<std::size_t>(s_idx)]);
    const int c_idx =
        b.add_generator("c" + std::to_string(++c_serial), origin, 0, Role::C, def);
    // The defining relator just pushed duplicates the conjugation relation;
    // keep it only in the conjugation table.
    b.relators.pop_back();
    b.conj_owner.push_back(c_idx);
    b.conj_images.push_back(window_word);

    // Replace the window by c in the relator: keep everything outside it.
    std::vector<Letter> rest;
    for (std::size_t i = (pos_pos + 1) % singles.size(); i != neg_pos;
         i = (i + 1) % singles.size())
      rest.push_back(singles[i]);
    rest.push_back({c_idx, 1});
    b.relators[target] = cyclic_reduce(from_single_letters(rest)).first;
    b.trace.push_back({TietzeStepKind::ReplaceRelator, "", b.render(b.relators[target]),
                       static_cast<int>(target)});
    if (b.relators[target].empty()) {
      b.trace.push_back(
          {TietzeStepKind::RemoveTrivialRelator, "", "", static_cast<int>(target)});
      b.relators.erase(b.relators.begin() + static_cast<std::ptrdiff_t>(target));
    }

    const long long remaining = stable_letter_count();
    if (remaining >= stable_letters)
      throw std::logic_error("stable-letter count failed to decrease during rewriting");
    stable_letters = remaining;
  }

  // Compact to [stable, d block, c block].
  FakeHnn f;
  std::vector<int> remap(b.names.size(), -1);
  auto take = [&](Role r) {
    for (std::size_t i = 0; i < b.names.size(); ++i) {
      if (!b.alive[i] || b.role[i] != r) continue;
      remap[i] = static_cast<int>(f.names.size());
      f.names.push_back(b.names[i]);
      if (r == Role::Stable) f.stable_origin = b.origin[i];
      if (r == Role::D) f.d_origin.push_back(b.origin[i]);
      if (r == Role::C) f.c_origin.push_back(b.origin[i]);
    }
  };
  take(Role::Stable);
  take(Role::D);
  take(Role::C);
  f.d_count = f.d_origin.size();
  f.c_count = f.c_origin.size();

  auto remap_word = [&](const Word& w) {
    std::vector<Letter> out = w.letters();
    for (Letter& l : out) {
      if (remap[static_cast<std::size_t>(l.gen)] < 0)
        throw std::logic_error("dead generator survived rewriting");
      l.gen = remap[static_cast<std::size_t>(l.gen)];
    }
    return Word::reduce(out);
  };
  for (const Word& r : b.relators) f.relators.push_back(remap_word(r));
  f.conj_images.reserve(b.conj_images.size());
  for (const Word& w : b.conj_images) f.conj_images.push_back(remap_word(w));
  f.chi.values.assign(f.names.size(), 0);
  f.chi.values[0] = 1;
  f.trace = std::move(b.trace);
  f.validate();
  return f;
}

FakeHnn tietze_simplify(const FakeHnn& input, int max_passes) {
  FakeHnn f = input;
  f.tietze_converged = false;
  int passes = 0;
  while (passes < max_passes) {
    // First s-free relator holding a d generator that occurs in exactly one
    // run with exponent +-1.
    int target_rel = -1, target_gen = -1;
    std::size_t target_run = 0;
    for (std::size_t k = 0; k < f.relators.size() && target_rel < 0; ++k) {
      const std::vector<Letter>& runs = f.relators[k].letters();
      for (std::size_t a = 0; a < runs.size(); ++a) {
        const Letter& l = runs[a];
        if (!f.is_d(l.gen) || (l.exp != 1 && l.exp != -1)) continue;
        bool unique = true;
        for (std::size_t o = 0; o < runs.size(); ++o) {
          if (o != a && runs[o].gen == l.gen) {
            unique = false;
            break;
          }
        }
        if (unique) {
          target_rel = static_cast<int>(k);
          target_gen = l.gen;
          target_run = a;
          break;
        }
      }
    }
    if (target_rel < 0) {
      f.tietze_converged = true;
      break;
    }
    ++passes;

    // Rotate the relator to d^e * w; then d = w^-e.
    const std::vector<Letter>& runs = f.relators[static_cast<std::size_t>(target_rel)].letters();
    const long long e = runs[target_run].exp;
    std::vector<Letter> tail;
    for (std::size_t o = 1; o < runs.size(); ++o)
      tail.push_back(runs[(target_run + o) % runs.size()]);
    const Word w = Word::reduce(tail);
    const Word replacement = e == 1 ? invert(w) : w;

    f.trace.push_back({TietzeStepKind::EliminateGenerator,
                       f.names[static_cast<std::size_t>(target_gen)],
                       to_text(replacement, f.names), -1});

    for (std::size_t k = 0; k < f.relators.size();) {
      f.relators[k] = cyclic_reduce(substitute(f.relators[k], target_gen, replacement)).first;
      if (f.relators[k].empty()) {
        f.trace.push_back({TietzeStepKind::RemoveTrivialRelator, "", "", static_cast<int>(k)});
        f.relators.erase(f.relators.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
    for (Word& img : f.conj_images) img = substitute(img, target_gen, replacement);

    // Drop the generator and close the index gap.
    const std::size_t gone = static_cast<std::size_t>(target_gen);
    f.names.erase(f.names.begin() + static_cast<std::ptrdiff_t>(gone));
    f.d_origin.erase(f.d_origin.begin() + static_cast<std::ptrdiff_t>(gone - 1));
    f.chi.values.pop_back();
    f.d_count -= 1;
    auto shift = [&](Word& word) {
      std::vector<Letter> ls = word.letters();
      for (Letter& l : ls) {
        if (l.gen > target_gen) l.gen -= 1;
      }
      word = Word::reduce(ls);
    };
    for (Word& r : f.relators) shift(r);
    for (Word& img : f.conj_images) shift(img);
  }
  f.tietze_passes = passes;
  f.validate();
  return f;
}

}  // namespace trank
