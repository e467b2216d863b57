#include "morsepres/words.hpp"

#include <algorithm>
#include <tuple>

namespace morsepres {

std::vector<Letter> Word::free_reduce_raw(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return {};
  k %= letters_.size();
  std::vector<Letter> raw(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  raw.insert(raw.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::move(raw));
}

Word free_reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word(std::move(raw));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(raw));
}

Word conjugate(const Word& w, const Word& c) { return concat(concat(c, w), invert(c)); }

Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(i),
                                  ls.begin() + static_cast<std::ptrdiff_t>(j)));
}

int occurrences(const Word& w, std::int32_t gen) {
  int n = 0;
  for (const Letter& l : w)
    if (l.gen == gen) ++n;
  return n;
}

Word equivalent_expression(const Word& r, std::int32_t gen) {
  if (occurrences(r, gen) != 1)
    throw GeneratorNotUnique("equivalent expression requires exactly one occurrence of the generator");
  std::size_t pos = 0;
  while (r[pos].gen != gen) ++pos;
  const std::int32_t eps = r[pos].sign;
  // rotate so the unique gen letter is first: r ~ gen^eps * w2
  std::vector<Letter> rest(r.letters().begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.letters().end());
  rest.insert(rest.end(), r.letters().begin(), r.letters().begin() + static_cast<std::ptrdiff_t>(pos));
  Word w2(std::move(rest));  // seam may reduce
  return eps > 0 ? invert(w2) : w2;
}

Word substitute(const Word& w, std::int32_t gen, const Word& repl) {
  if (occurrences(repl, gen) > 0)
    throw SelfReference("substitution word mentions the substituted generator");
  const Word repl_inv = invert(repl);
  std::vector<Letter> raw;
  raw.reserve(w.size() + repl.size());
  for (const Letter& l : w) {
    if (l.gen != gen) {
      raw.push_back(l);
      continue;
    }
    const Word& img = l.sign > 0 ? repl : repl_inv;
    raw.insert(raw.end(), img.letters().begin(), img.letters().end());
  }
  return Word(std::move(raw));
}

namespace {
// rotation without seam reduction: the "same relator up to rotation" relation is exact
std::vector<Letter> raw_rotate(const std::vector<Letter>& v, std::size_t k) {
  std::vector<Letter> out(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

bool lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  auto code = [](const Letter& l) { return std::pair(l.gen, l.sign < 0); };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const Letter& x, const Letter& y) { return code(x) < code(y); });
}
}  // namespace

std::vector<Letter> cyclic_canonical(const Word& w) {
  if (w.empty()) return {};
  const std::vector<Letter> inv = invert(w).letters();
  std::vector<Letter> best = w.letters();
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (const auto* base : {&w.letters(), &inv}) {
      std::vector<Letter> cand = raw_rotate(*base, k);
      if (lex_less(cand, best)) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace morsepres
