#include "morsepres/morse.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace morsepres {

CombinatorialState::CombinatorialState(const Complex2& c)
    : complex_(&c),
      edge_alive_(c.edges().size(), 1),
      face_alive_(c.faces().size(), 1) {
  words_.reserve(c.faces().size());
  for (int f = 0; f < static_cast<int>(c.faces().size()); ++f)
    words_.push_back(c.boundary_word(f));
}

std::vector<int> CombinatorialState::alive_edges() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(edge_alive_.size()); ++e)
    if (edge_alive_[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

std::vector<int> CombinatorialState::alive_faces() const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(face_alive_.size()); ++f)
    if (face_alive_[static_cast<std::size_t>(f)]) out.push_back(f);
  return out;
}

void CombinatorialState::kill_tree_edge(int e) {
  if (!edge_alive(e)) throw Error("tree edge already dead");
  edge_alive_[static_cast<std::size_t>(e)] = 0;
  const Word unit;
  for (int f = 0; f < static_cast<int>(face_alive_.size()); ++f)
    if (face_alive_[static_cast<std::size_t>(f)] && occurrences(words_[static_cast<std::size_t>(f)], e))
      words_[static_cast<std::size_t>(f)] = substitute(words_[static_cast<std::size_t>(f)], e, unit);
}

void CombinatorialState::collapse(int e, int f) {
  if (!edge_alive(e) || !face_alive(f)) throw Error("collapse of a dead cell");
  const Word& w = words_[static_cast<std::size_t>(f)];
  if (occurrences(w, e) != 1)
    throw OccurrenceViolation("edge " + complex_->edges()[static_cast<std::size_t>(e)].id +
                              " does not occur exactly once in face " +
                              complex_->faces()[static_cast<std::size_t>(f)].id);
  const Word expr = equivalent_expression(w, e);
  log_.push_back({complex_->edges()[static_cast<std::size_t>(e)].id,
                  complex_->faces()[static_cast<std::size_t>(f)].id, expr});
  edge_alive_[static_cast<std::size_t>(e)] = 0;
  face_alive_[static_cast<std::size_t>(f)] = 0;
  for (int g = 0; g < static_cast<int>(face_alive_.size()); ++g)
    if (face_alive_[static_cast<std::size_t>(g)] && occurrences(words_[static_cast<std::size_t>(g)], e))
      words_[static_cast<std::size_t>(g)] = substitute(words_[static_cast<std::size_t>(g)], e, expr);
}

void check_spanning_tree(const Complex2& c, const FacePoset& x,
                         const std::vector<std::pair<int, int>>& m0) {
  const std::size_t nv = c.vertices().size();
  if (m0.size() + 1 != nv)
    throw NotASpanningTree("matched 0/1 cells are not a spanning tree: wrong edge count");
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto [lo, hi] : m0) {
    const int e = x.edge_of_cell(hi);
    const auto& ed = c.edges()[static_cast<std::size_t>(e)];
    if (lo != ed.src && lo != ed.dst)
      throw NotASpanningTree("matched vertex is not an endpoint of its edge");
    const int a = find(ed.src), b = find(ed.dst);
    if (a == b) throw NotASpanningTree("matched 0/1 cells contain a cycle");
    parent[static_cast<std::size_t>(a)] = b;
  }
  // V-1 edges and no cycle on V vertices force connectivity
}

std::string sanitize_cell_id(const std::string& id) {
  std::string out;
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) out = "g_";
  for (char ch : id)
    out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
  return out;
}

TreeQuotient tree_quotient(const Complex2& c, const FacePoset& x, const Matching& m) {
  const auto m0 = m.dim_pairs(x, 0);
  check_spanning_tree(c, x, m0);
  CombinatorialState state(c);
  for (auto [lo, hi] : m0) state.kill_tree_edge(x.edge_of_cell(hi));

  TreeQuotient out{std::move(state), {}, {}, {}};
  out.q0_gen_edges = out.state.alive_edges();
  std::vector<int> gen_of_edge(c.edges().size(), -1);
  for (std::size_t i = 0; i < out.q0_gen_edges.size(); ++i) {
    const int e = out.q0_gen_edges[i];
    gen_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(i);
    out.q0.generators.push_back(sanitize_cell_id(c.edges()[static_cast<std::size_t>(e)].id));
  }
  for (int f : out.state.alive_faces()) {
    std::vector<Letter> raw;
    for (const Letter& l : out.state.face_word(f))
      raw.emplace_back(gen_of_edge[static_cast<std::size_t>(l.gen)], l.sign);
    out.q0.relators.push_back(Word(std::move(raw)));
    out.q0_face_of.push_back(f);
  }
  out.q0.origin = "q0";
  out.q0.validate();
  return out;
}

namespace {
std::vector<std::pair<int, int>> m1_in_collapse_order(const Complex2& c, const FacePoset& x,
                                                      const Matching& m) {
  auto m1 = m.dim_pairs(x, 1);
  std::sort(m1.begin(), m1.end(), [&](const auto& a, const auto& b) {
    return c.edges()[static_cast<std::size_t>(x.edge_of_cell(a.first))].id <
           c.edges()[static_cast<std::size_t>(x.edge_of_cell(b.first))].id;
  });
  return m1;
}

void require_single_critical_vertex(const FacePoset& x, const Matching& m) {
  if (!is_acyclic(x, m)) throw CyclicMatching("matching is not acyclic");
  const auto crit = critical_cells(x, m);
  if (crit[0].size() != 1)
    throw Error("matching must have exactly one critical 0-cell, has " +
                std::to_string(crit[0].size()));
}
}  // namespace

Presentation morse_presentation(const Complex2& c, const FacePoset& x, const Matching& m,
                                std::string origin) {
  require_single_critical_vertex(x, m);
  TreeQuotient tq = tree_quotient(c, x, m);
  for (auto [lo, hi] : m1_in_collapse_order(c, x, m))
    tq.state.collapse(x.edge_of_cell(lo), x.face_of_cell(hi));

  Presentation out;
  out.origin = origin.empty() ? "morse" : std::move(origin);
  const auto edges = tq.state.alive_edges();
  std::vector<int> gen_of_edge(c.edges().size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    gen_of_edge[static_cast<std::size_t>(edges[i])] = static_cast<int>(i);
    out.generators.push_back(sanitize_cell_id(c.edges()[static_cast<std::size_t>(edges[i])].id));
  }
  for (int f : tq.state.alive_faces()) {
    std::vector<Letter> raw;
    for (const Letter& l : tq.state.face_word(f))
      raw.emplace_back(gen_of_edge[static_cast<std::size_t>(l.gen)], l.sign);
    out.relators.push_back(Word(std::move(raw)));
  }
  out.validate();
  return out;
}

Presentation morse_presentation(const Presentation& p, const Matching& m) {
  const Complex2 c = presentation_complex(p);
  const FacePoset x(c);
  return morse_presentation(c, x, m, "morse(" + to_text(p) + ")");
}

MorseComplexResult morse_complex(const Complex2& c, const FacePoset& x, const Matching& m) {
  require_single_critical_vertex(x, m);
  TreeQuotient tq = tree_quotient(c, x, m);
  for (auto [lo, hi] : m1_in_collapse_order(c, x, m))
    tq.state.collapse(x.edge_of_cell(lo), x.face_of_cell(hi));
  MorseComplexResult out;
  for (int e : tq.state.alive_edges()) out.critical_edges.push_back(c.edges()[static_cast<std::size_t>(e)].id);
  for (int f : tq.state.alive_faces())
    out.critical_faces.emplace_back(c.faces()[static_cast<std::size_t>(f)].id, tq.state.face_word(f));
  return out;
}

std::string edge_word_text(const Complex2& c, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += c.edges()[static_cast<std::size_t>(w[i].gen)].id;
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace morsepres
