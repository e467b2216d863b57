#include "morsepres/torus_demo.hpp"

namespace morsepres {

Complex2 torus_fixture() {
  Complex2 c;
  const int v1 = c.add_vertex("v1");
  const int v2 = c.add_vertex("v2");
  const int v3 = c.add_vertex("v3");
  const int v5 = c.add_vertex("v5");
  const int x2 = c.add_edge("x2", v2, v5);
  const int x3 = c.add_edge("x3", v3, v1);
  const int x4 = c.add_edge("x4", v1, v3);
  const int x5 = c.add_edge("x5", v5, v3);
  const int x6 = c.add_edge("x6", v2, v1);
  const int x7 = c.add_edge("x7", v5, v3);
  const int x8 = c.add_edge("x8", v2, v5);
  const int x9 = c.add_edge("x9", v2, v1);
  c.add_face("e7", {{x2, +1}, {x7, +1}, {x3, +1}, {x6, -1}});
  c.add_face("e8", {{x8, +1}, {x7, +1}, {x4, -1}, {x6, -1}});
  c.add_face("e9", {{x9, +1}, {x4, +1}, {x5, -1}, {x8, -1}});
  c.add_face("e10", {{x3, -1}, {x5, -1}, {x2, -1}, {x9, +1}});
  c.validate();
  return c;
}

Matching torus_fixture_matching(const FacePoset& x) {
  Matching m;
  auto pair = [&](const char* lo, const char* hi) {
    m.pairs.emplace_back(x.index_of(lo), x.index_of(hi));
  };
  pair("v2", "x2");
  pair("v3", "x3");
  pair("v5", "x5");
  pair("x7", "e7");
  pair("x8", "e8");
  pair("x9", "e9");
  m.normalize();
  return m;
}

TorusDemo run_torus_demo() {
  const Complex2 c = torus_fixture();
  const FacePoset x(c);
  const Matching m = torus_fixture_matching(x);
  if (!is_acyclic(x, m)) throw Error("torus fixture matching is not acyclic");

  CombinatorialState state(c);
  const int e10 = c.face_index("e10");
  TorusDemo demo;
  auto snap = [&](const std::string& label) {
    demo.steps.emplace_back(label, edge_word_text(c, state.face_word(e10)));
  };
  snap("initial");
  state.collapse(c.edge_index("x9"), c.face_index("e9"));
  snap("after pair 9");
  state.collapse(c.edge_index("x8"), c.face_index("e8"));
  state.collapse(c.edge_index("x7"), c.face_index("e7"));
  snap("after pairs 8, 7");
  state.kill_tree_edge(c.edge_index("x5"));
  state.kill_tree_edge(c.edge_index("x3"));
  state.kill_tree_edge(c.edge_index("x2"));
  snap("after collapsing the spanning tree");
  demo.final_word = edge_word_text(c, state.face_word(e10));
  for (int e : state.alive_edges()) demo.critical_edges.push_back(c.edges()[static_cast<std::size_t>(e)].id);
  return demo;
}

}  // namespace morsepres
