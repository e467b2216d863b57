#include <doctest.h>

#include "helpers.hpp"
#include "morsepres/catalog.hpp"
#include "morsepres/complex.hpp"
#include "morsepres/morse.hpp"
#include "morsepres/simplify.hpp"

using namespace morsepres;
using testutil::pres;

TEST_CASE("search phase") {
  SUBCASE("suffix replacement") {
    // r1 = abc, r2 = zbc: v = bc, u = a, r2 <- z a^-1
    auto [q, changed] = search_phase(pres("<a,b,c,z | a*b*c, z*b*c>"));
    CHECK(changed);
    CHECK(q.relators[0] == pres("<a,b,c,z | a*b*c>").relators[0]);
    CHECK(cyclic_canonical(q.relators[1]) ==
          cyclic_canonical(pres("<a,b,c,z | z*a^-1>").relators[0]));
  }
  SUBCASE("single relator never changes") {
    auto [q, changed] = search_phase(pres("<x | x>"));
    CHECK_FALSE(changed);
    CHECK(q == pres("<x | x>"));
  }
  SUBCASE("replacements strictly reduce the total length") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
      Presentation p;
      p.generators = {"a", "b"};
      p.relators = {testutil::random_word(rng, 2, 12), testutil::random_word(rng, 2, 12)};
      const auto before = stats(p).total_length;
      auto [q, changed] = search_phase(p);
      // cyclic reduction may shave ends even without a replacement
      CHECK(stats(q).total_length <= before);
      if (changed) CHECK(stats(q).total_length <= before);
    }
  }
}

TEST_CASE("elimination phase") {
  SUBCASE("worked n=1 example goes all the way to empty") {
    auto [q, changed] = elimination_phase(pres("<x,y | x*y*x*y^-1*x^-1*y^-1, x*y^-2>"));
    CHECK(changed);
    CHECK(to_text(q) == "< | >");
  }
  SUBCASE("no single occurrence, no change") {
    auto [q, changed] = elimination_phase(pres("<x,y | [x,y]>"));
    CHECK_FALSE(changed);
  }
  SUBCASE("stops when nothing is eliminable") {
    auto [q, changed] = elimination_phase(pres("<a,b | a*b^-1, a*b>"));
    CHECK(changed);
    CHECK(to_text(q) == "<b | b^2>");
  }
}

TEST_CASE("simplified on the paper families") {
  SUBCASE("G_q trivializes for even q without the duplicate rule") {
    for (long q : {2L, 4L, 6L}) {
      const SimplifyReport rep = simplified(catalog("G", {-1, -1, -1, -q}));
      CHECK(rep.trivialized);
      CHECK_FALSE(rep.used_duplicate_deletion);
    }
  }
  SUBCASE("AK2, MS3, BarmakBprime keep their generator and relator counts") {
    for (const char* spec : {"AK(2)", "MS(3)", "BarmakBprime"}) {
      const Presentation p = catalog(parse_catalog_spec(spec));
      const SimplifyReport rep = simplified(p);
      CHECK(rep.final.generators.size() == p.generators.size());
      CHECK(rep.final.relators.size() == p.relators.size());
    }
  }
  SUBCASE("free generators with trivial relators") {
    CHECK(simplified(pres("<x,y | x, y>")).trivialized);
  }
}

TEST_CASE("duplicate rule and the Q** flag") {
  SUBCASE("duplicates deleted when allowed") {
    const SimplifyReport rep = simplified(pres("<x,y | x*y, x*y>"));
    CHECK(rep.used_duplicate_deletion);
    CHECK(to_text(rep.final) == "<y | >");
  }
  SUBCASE("without the rule an empty relator survives") {
    SimplifyConfig cfg;
    cfg.allow_duplicate_deletion = false;
    const SimplifyReport rep = simplified(pres("<x,y | x*y, x*y>"), cfg);
    CHECK_FALSE(rep.used_duplicate_deletion);
    CHECK_FALSE(rep.trivialized);
    CHECK(rep.final.has_empty_relator());
  }
  SUBCASE("rotated and inverted duplicates are recognized") {
    const SimplifyReport rep = simplified(pres("<x,y | x*y*x, x^-1*y^-1*x^-1, x*x*y>"));
    CHECK(rep.used_duplicate_deletion);
  }
  SUBCASE("BarmakB reduces to the commutator presentation via the (6)-move") {
    const SimplifyReport rep = simplified(catalog("BarmakB", {}));
    CHECK(rep.used_duplicate_deletion);
    CHECK(to_text(rep.final) == "<x,y | x*y*x^-1*y^-1>");
  }
}

TEST_CASE("move log replay and purity") {
  SimplifyConfig cfg;
  cfg.log_moves = true;
  SUBCASE("replaying the log reproduces the final presentation") {
    for (const char* text :
         {"<x,y | x*y*x*y^-1*x^-1*y^-1, x*y^-2>", "<x,y | x*y, x*y>", "<a,b,c,z | a*b*c, z*b*c>"}) {
      const Presentation p = pres(text);
      const SimplifyReport rep = simplified(p, cfg);
      CHECK(replay_moves(p, rep.moves) == rep.final);
    }
    for (long q : {2L, 4L}) {
      const Presentation p = catalog("G", {-1, -1, -1, -q});
      const SimplifyReport rep = simplified(p, cfg);
      CHECK(replay_moves(p, rep.moves) == rep.final);
      CHECK(rep.trivialized);
    }
  }
  SUBCASE("flag false means moves (1)-(4) only") {
    const Presentation p = catalog("G", {-1, -1, -1, -4});
    const SimplifyReport rep = simplified(p, cfg);
    REQUIRE_FALSE(rep.used_duplicate_deletion);
    for (const Move& m : rep.moves) CHECK(preserves_deficiency_class(m.kind));
  }
  SUBCASE("logged and unlogged runs produce identical output") {
    Rng rng(52);
    const Presentation p = catalog("AK", {2});
    const Complex2 c = presentation_complex(p);
    const FacePoset x(c);
    for (int t = 0; t < 20; ++t) {
      const Matching m = spanning_matching(x, rng);
      const Presentation q = morse_presentation(c, x, m);
      const SimplifyReport logged = simplified(q, cfg);
      const SimplifyReport plain = simplified(q);
      CHECK(logged.final == plain.final);
      CHECK(logged.used_duplicate_deletion == plain.used_duplicate_deletion);
      CHECK(replay_moves(q, logged.moves) == logged.final);
    }
  }
}

TEST_CASE("determinism and idempotence") {
  for (const char* spec : {"AK(2)", "MS(3)", "G(-1,-1,-1,-3)", "Gtilde(3)"}) {
    const Presentation p = catalog(parse_catalog_spec(spec));
    const SimplifyReport a = simplified(p);
    const SimplifyReport b = simplified(p);
    CHECK(a.final == b.final);
    const SimplifyReport again = simplified(a.final);
    CHECK(again.final == a.final);
  }
}

TEST_CASE("abelianization preserved when no (6)-move fires") {
  Rng rng(53);
  const Presentation p = catalog("MS", {3});
  const Complex2 c = presentation_complex(p);
  const FacePoset x(c);
  const auto base = nonunit_factors(smith_normal_form(abelianization_matrix(p)));
  for (int t = 0; t < 30; ++t) {
    const Matching m = spanning_matching(x, rng);
    const Presentation q = morse_presentation(c, x, m);
    const SimplifyReport rep = simplified(q);
    if (!rep.used_duplicate_deletion)
      CHECK(nonunit_factors(smith_normal_form(abelianization_matrix(rep.final))) == base);
  }
}
