#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "morsepres/catalog.hpp"
#include "morsepres/complex.hpp"
#include "morsepres/torus_demo.hpp"

using namespace morsepres;
using testutil::pres;

TEST_CASE("presentation complex cell counts") {
  const Complex2 c = presentation_complex(pres("<x,y | x^2, x*y^-2>"));
  CHECK(c.cell_count() == 29);
  CHECK(c.vertices().size() == 5);
  CHECK(c.edges().size() == 14);
  CHECK(c.faces().size() == 10);
  CHECK(c.connected());

  const Complex2 ak2 = presentation_complex(catalog("AK", {2}));
  CHECK(ak2.cell_count() == 53);  // 4(l+m)+1 with l=11, m=2

  const Complex2 tiny = presentation_complex(pres("<x | x>"));
  CHECK(tiny.cell_count() == 9);
  CHECK(tiny.vertices().size() == 3);
  CHECK(tiny.edges().size() == 4);
  CHECK(tiny.faces().size() == 2);

  CHECK_THROWS_AS((void)presentation_complex(pres("<x,y | [x,y], 1>")), EmptyRelator);
}

TEST_CASE("cell count formula and Euler characteristic across the catalog") {
  for (const char* spec : {"AK(2)", "AK(3)", "MS(3)", "G(-1,-1,-1,-2)", "Gtilde(2)", "Gtilde(3)",
                           "BarmakBprime"}) {
    const Presentation p = catalog(parse_catalog_spec(spec));
    const auto s = stats(p);
    const Complex2 c = presentation_complex(p);
    CHECK(c.vertices().size() == static_cast<std::size_t>(1 + s.generators + s.relators));
    CHECK(c.edges().size() == static_cast<std::size_t>(2 * s.generators + 2 * s.total_length));
    CHECK(c.faces().size() == static_cast<std::size_t>(2 * s.total_length));
    if (s.balanced()) CHECK(c.cell_count() == 4 * (s.total_length + s.relators) + 1);
    CHECK(c.euler_characteristic() == 1 - s.generators + s.relators);
    CHECK(c.connected());
  }
  // unbalanced sanity
  const Complex2 c = presentation_complex(pres("<x,y | x>"));
  CHECK(c.euler_characteristic() == 0);
}

TEST_CASE("face poset structure") {
  SUBCASE("single vertex") {
    Complex2 c;
    c.add_vertex("p");
    const FacePoset x(c);
    CHECK(x.size() == 1);
    CHECK(x.cover_count() == 0);
  }
  SUBCASE("triangles cover exactly three edges") {
    const Complex2 c = presentation_complex(pres("<x | x>"));
    const FacePoset x(c);
    CHECK(x.size() == 9);
    for (int f : x.cells_of_dim(2)) CHECK(x.down(f).size() == 3);
    for (int e : x.cells_of_dim(1)) CHECK(x.down(e).size() == 2);
  }
  SUBCASE("radial edges are covered by exactly two triangles") {
    const Complex2 c = presentation_complex(pres("<x,y | x^2, x*y^-2>"));
    const FacePoset x(c);
    for (int e = 0; e < static_cast<int>(c.edges().size()); ++e) {
      if (c.edges()[static_cast<std::size_t>(e)].id.rfind("e:r", 0) == 0)
        CHECK(x.up(x.edge_cell(e)).size() == 2);
    }
    // covers are exactly incidence
    for (int f = 0; f < static_cast<int>(c.faces().size()); ++f)
      for (auto [e, s] : c.faces()[static_cast<std::size_t>(f)].boundary)
        CHECK(x.covers(x.edge_cell(e), x.face_cell(f)));
  }
}

TEST_CASE("triangle fan boundaries trace the subdivided relator") {
  for (const char* spec : {"AK(2)", "MS(3)", "Gtilde(2)"}) {
    const Presentation p = catalog(parse_catalog_spec(spec));
    const Complex2 c = presentation_complex(p);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const Word& r = p.relators[i];
      // concatenate the fan's triangle boundaries; shared radial edges cancel
      Word acc;
      for (std::size_t t = 0; t < 2 * r.size(); ++t) {
        const int f = c.face_index("f:r" + std::to_string(i) + ":t" + std::to_string(t));
        REQUIRE(f >= 0);
        acc = concat(acc, c.boundary_word(f));
      }
      std::vector<Letter> expected;
      for (const Letter& l : r) {
        const std::string g = p.generators[static_cast<std::size_t>(l.gen)];
        const int h1 = c.edge_index("e:" + g + ":1");
        const int h2 = c.edge_index("e:" + g + ":2");
        if (l.sign > 0) {
          expected.emplace_back(h1, 1);
          expected.emplace_back(h2, 1);
        } else {
          expected.emplace_back(h2, -1);
          expected.emplace_back(h1, -1);
        }
      }
      const int rad0 = c.edge_index("e:r" + std::to_string(i) + ":t0");
      CHECK(conjugate(Word(std::move(expected)), Word::single(rad0)) == acc);
    }
  }
}

TEST_CASE("complex file round trip and the torus fixture") {
  const Complex2 t = load_complex_file(std::string(TEST_DATA_DIR) + "/torus.cplx");
  CHECK(t.vertices().size() == 4);
  CHECK(t.edges().size() == 8);
  CHECK(t.faces().size() == 4);
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.connected());
  // e10 boundary as printed
  CHECK(edge_word_text(t, t.boundary_word(t.face_index("e10"))) == "x3^-1 x5^-1 x2^-1 x9");
  // orientable: some face-sign assignment makes every edge appear once each way
  bool orientable = false;
  for (int signs = 0; signs < 16 && !orientable; ++signs) {
    bool ok = true;
    for (int e = 0; e < 8 && ok; ++e) {
      int sum = 0;
      for (int f = 0; f < 4; ++f)
        for (auto [ee, s] : t.faces()[static_cast<std::size_t>(f)].boundary)
          if (ee == e) sum += s * (((signs >> f) & 1) ? -1 : 1);
      ok = sum == 0;
    }
    orientable = ok;
  }
  CHECK(orientable);
  // programmatic fixture matches the data file
  CHECK(complex_text(torus_fixture()) == complex_text(t));
  // round trip through the text form
  std::istringstream in(complex_text(t));
  CHECK(complex_text(load_complex(in)) == complex_text(t));
}

TEST_CASE("regularity violations") {
  auto load_str = [](const std::string& s) {
    std::istringstream in(s);
    return load_complex(in);
  };
  CHECK_THROWS_AS((void)load_str("v a\nv b\ne e1 a b\nf f1 +e1\n"), RegularityViolation);
  // path a->b->a->c revisits a
  CHECK_THROWS_AS(
      (void)load_str("v a\nv b\nv c\ne e1 a b\ne e2 b a\ne e3 a c\nf f1 +e1 +e2 +e3\n"),
      RegularityViolation);
  CHECK_THROWS_AS((void)load_str("v a\ne e1 a a\n"), RegularityViolation);  // loop
  CHECK_THROWS_AS((void)load_str("v a\nv a\n"), RegularityViolation);       // duplicate id
  CHECK_THROWS_AS((void)load_str("e e1 a b\n"), ParseError);                // undeclared vertex
  CHECK_THROWS_AS((void)load_str("x what\n"), ParseError);
  // repeated edge in one face
  CHECK_THROWS_AS((void)load_str("v a\nv b\ne e1 a b\nf f1 +e1 -e1\n"), RegularityViolation);
  // non-closed boundary
  CHECK_THROWS_AS((void)load_str("v a\nv b\nv c\ne e1 a b\ne e2 b c\nf f1 +e1 +e2\n"),
                  RegularityViolation);
}
