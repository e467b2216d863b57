#pragma once

#include <cstdint>
#include <vector>

#include "morsepres/errors.hpp"

namespace morsepres {

// One occurrence of a generator, with orientation.
struct Letter {
  std::int32_t gen = 0;
  std::int32_t sign = +1;  // +1 or -1

  Letter() = default;
  Letter(std::int32_t g, std::int32_t s) : gen(g), sign(s) {}
  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over generator indices. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) : letters_(free_reduce_raw(std::move(raw))) {}

  static Word single(std::int32_t gen, std::int32_t sign = +1) {
    Word w;
    w.letters_.emplace_back(gen, sign);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  friend bool operator==(const Word&, const Word&) = default;

  // Left rotation by k letters, treating the word cyclically; the seam is re-reduced.
  Word rotated(std::size_t k) const;

 private:
  static std::vector<Letter> free_reduce_raw(std::vector<Letter> raw);
  std::vector<Letter> letters_;
};

Word free_reduce(std::vector<Letter> raw);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
// c * w * c^-1, freely reduced.
Word conjugate(const Word& w, const Word& c);
Word cyclic_reduce(const Word& w);
int occurrences(const Word& w, std::int32_t gen);

// For a relator r with a unique occurrence of gen, the word equal to gen in the
// one-relator group: rotate r to gen^e * w2 and return (w2^-1)^e.
// Throws GeneratorNotUnique unless occurrences(r, gen) == 1.
Word equivalent_expression(const Word& r, std::int32_t gen);

// Replace gen^+1 by repl and gen^-1 by repl^-1 everywhere, then reduce.
// Throws SelfReference if repl mentions gen.
Word substitute(const Word& w, std::int32_t gen, const Word& repl);

// Smallest letter sequence (lexicographically, by (gen, sign<0) codes) among
// all cyclic rotations of w and of w^-1, without seam reduction. Two relators
// are equal up to rotation/inversion iff their canonical sequences coincide.
std::vector<Letter> cyclic_canonical(const Word& w);

}  // namespace morsepres
