#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morsepres/words.hpp"

namespace morsepres {

// Finite group presentation < generators | relators >. Relators are stored
// freely reduced but not cyclically reduced; the empty relator is legal and
// only flagged (has_empty_relator).
struct Presentation {
  std::vector<std::string> generators;  // unique display names
  std::vector<Word> relators;
  std::string origin;  // provenance tag, ignored by comparisons

  int generator_index(std::string_view name) const;
  bool has_empty_relator() const;
  // enforces name uniqueness/shape, letter ranges, free reduction
  void validate() const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.generators == b.generators && a.relators == b.relators;
  }
};

struct PresentationStats {
  int generators = 0;
  int relators = 0;
  long long total_length = 0;
  int deficiency = 0;  // generators - relators
  bool balanced() const { return deficiency == 0; }
};

PresentationStats stats(const Presentation& p);

// Text grammar (also the file format):
//   presentation := "<" genlist "|" rellist ">"
//   genlist := ident ("," ident)* | eps ; rellist := word ("," word)* | eps
//   word := term ("*" term)* | "1" ; term := atom ("^" integer)?
//   atom := ident | "[" word "," word "]"     [u,v] = u v u^-1 v^-1
Presentation parse_presentation(const std::string& text);
std::string to_text(const Presentation& p);
std::string word_text(const Word& w, const std::vector<std::string>& names);

// --- elementary moves -------------------------------------------------------

enum class MoveKind {
  InvertRelator,             // (1) r_i <- r_i^-1
  MultiplyRelator,           // (2) r_i <- r_i * r_j
  ConjugateRelator,          // (3) r_i <- w * r_i * w^-1
  RotateRelator,             // (3) r_i <- left rotation by k
  AddGeneratorAndRelator,    // (4) new generator g and relator "g"
  RemoveGeneratorAndRelator, // (4)^-1 as used by Remark-style eliminations
  AddTrivialRelator,         // (6) append the relator 1
  RemoveTrivialRelator,      // (6)^-1 delete an empty relator
};

struct Move {
  MoveKind kind;
  int i = -1;          // relator index at the time of the move
  int j = -1;          // second relator (MultiplyRelator)
  int k = 0;           // rotation offset (RotateRelator)
  Word w{};            // conjugator (ConjugateRelator)
  int gen = -1;        // generator index (RemoveGeneratorAndRelator)
  std::string name{};  // generator name (AddGeneratorAndRelator)
};

using MoveLog = std::vector<Move>;

Presentation apply_move(Presentation p, const Move& m);
Presentation replay_moves(Presentation p, const MoveLog& log);
// true for the Q**-safe kinds (1)-(4); the trivial-relator moves are (6)
bool preserves_deficiency_class(MoveKind k);
std::string move_text(const Move& m, const Presentation& before);

// Remove generator gen together with relator rel (which must contain gen
// exactly once); every other relator has gen replaced by the equivalent
// expression induced by relator rel. The returned log replays the change
// bit-exactly from the input.
std::pair<Presentation, MoveLog> eliminate_generator(const Presentation& p, int gen, int rel);

// Same result through plain substitution, no move log. The two routes agree
// exactly; the log-free one is the fast path.
Presentation eliminate_generator_direct(const Presentation& p, int gen, int rel);

// --- abelianization oracle --------------------------------------------------

using IntMatrix = std::vector<std::vector<long long>>;

// entry (i, j) = exponent sum of generator j in relator i
IntMatrix abelianization_matrix(const Presentation& p);

// invariant factors d1 | d2 | ... (non-negative, zeros last), length min(m, n);
// throws OverflowError if 64-bit intermediate arithmetic would wrap
std::vector<long long> smith_normal_form(IntMatrix m);

// factors with the units dropped (what (4)-moves cannot change)
std::vector<long long> nonunit_factors(std::vector<long long> factors);

// True iff q is obtained from p by renaming and/or inverting generators,
// reordering, inverting and rotating relators. Brute force; both presentations
// must have at most four generators (TooLarge otherwise).
bool canonical_equivalence(const Presentation& p, const Presentation& q);

}  // namespace morsepres
