#include <doctest.h>

#include "helpers.hpp"
#include "morsepres/words.hpp"

using namespace morsepres;
using testutil::random_word;
using testutil::random_word_avoiding;
using testutil::rel;

namespace {
// independent oracle: inversion is reverse-and-flip on the raw letters
Word invert_oracle(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : raw) l.sign = -l.sign;
  return Word(std::move(raw));
}
}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word({{0, 1}, {0, -1}}).empty());
  // y^2 y y^2 y^-1 y^-2 y^-1 -> y
  CHECK(rel("<y | y^2*y*y^2*y^-1*y^-2*y^-1>") == rel("<y | y>"));
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 3, 24);
    CHECK(concat(w, invert(w)).empty());
    CHECK(Word(w.letters()) == w);  // idempotent
  }
}

TEST_CASE("inversion") {
  CHECK(invert(rel("<x,y | x*y^-1>")) == rel("<x,y | y*x^-1>"));
  CHECK(invert(Word{}) == Word{});
  CHECK(invert(rel("<x,y | [x,y]>")) == rel("<x,y | y*x*y^-1*x^-1>"));
  Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 3, 24);
    CHECK(invert(w) == invert_oracle(w));
    CHECK(invert(invert(w)) == w);
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(rel("<x,y | x^-1*y*x>")) == rel("<x,y | y>"));
  const Word already = rel("<x,y | x*y*x*y^-1*x^-1*y^-1>");
  CHECK(cyclic_reduce(already) == already);
  CHECK(cyclic_reduce(Word{}) == Word{});
  Rng rng(9);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 3, 24);
    const Word c = cyclic_reduce(w);
    CHECK(cyclic_reduce(c) == c);
    if (!c.empty()) CHECK(c.letters().front() != c.letters().back().inverse());
  }
}

TEST_CASE("occurrences") {
  CHECK(occurrences(rel("<x,y | x*y^-2>"), 0) == 1);
  CHECK(occurrences(Word{}, 0) == 0);
  CHECK(occurrences(rel("<x,y | x*y*x*y^-1*x^-1*y^-1>"), 0) == 3);
}

TEST_CASE("equivalent expression") {
  CHECK(equivalent_expression(rel("<x,y | x*y^-2>"), 0) == rel("<x,y | y^2>"));
  CHECK(equivalent_expression(rel("<x | x>"), 0).empty());
  CHECK(equivalent_expression(rel("<a,b,x | a*x^-1*b>", 0), 2) == rel("<a,b,x | b*a>"));
  CHECK_THROWS_AS((void)equivalent_expression(rel("<x | x^2>"), 0), GeneratorNotUnique);
  CHECK_THROWS_AS((void)equivalent_expression(rel("<x,y | y^3>"), 0), GeneratorNotUnique);
}

TEST_CASE("substitution") {
  // the n=1 worked example: x -> y^2 in xyxy^-1x^-1y^-1 reduces to y
  CHECK(substitute(rel("<x,y | x*y*x*y^-1*x^-1*y^-1>"), 0, rel("<x,y | y^2>")) ==
        rel("<x,y | y>"));
  const Word untouched = rel("<x,y | y*y>");
  CHECK(substitute(untouched, 0, rel("<x,y | y^-3>")) == untouched);
  CHECK_THROWS_AS((void)substitute(rel("<x,y | x>"), 0, rel("<x,y | y*x>")), SelfReference);
}

TEST_CASE("rewriting rule contract, all rotations") {
  Rng rng(10);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const int gens = 3;
    const int g = static_cast<int>(rng.below(gens));
    // w1 g^e w2 with g-free w1, w2
    std::vector<Letter> raw = random_word_avoiding(rng, gens, g, 10).letters();
    raw.emplace_back(g, rng.below(2) ? 1 : -1);
    const Word tail = random_word_avoiding(rng, gens, g, 10);
    raw.insert(raw.end(), tail.letters().begin(), tail.letters().end());
    const Word r(std::move(raw));
    if (occurrences(r, g) != 1) continue;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Word rot = r.rotated(k);
      REQUIRE(occurrences(rot, g) == 1);
      const Word expr = equivalent_expression(rot, g);
      CHECK(occurrences(expr, g) == 0);
      CHECK(substitute(rot, g, expr).empty());
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("substitute eliminates every occurrence") {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 3, 24);
    const Word repl = random_word_avoiding(rng, 3, 1, 8);
    CHECK(occurrences(substitute(w, 1, repl), 1) == 0);
  }
}

TEST_CASE("cyclic canonical identifies rotation/inversion classes") {
  const Word w = rel("<x,y | x*y*x^-1*y^-1>");
  CHECK(cyclic_canonical(w) == cyclic_canonical(w.rotated(2)));
  CHECK(cyclic_canonical(w) == cyclic_canonical(invert(w)));
  CHECK(cyclic_canonical(w) != cyclic_canonical(rel("<x,y | x*y*x^-1*y>")));
}
