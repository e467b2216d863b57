#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morsepres/complex.hpp"
#include "morsepres/matching.hpp"

namespace morsepres {

struct CollapseStep {
  std::string edge, face;
  Word expr;  // equivalent expression, letters are complex edge indices
};

// Attaching-word state of a complex during internal collapses. Complex edge
// indices serve as the generator letters of the face words; words stay freely
// reduced throughout.
class CombinatorialState {
 public:
  explicit CombinatorialState(const Complex2& c);

  const Complex2& complex() const { return *complex_; }
  bool edge_alive(int e) const { return edge_alive_[static_cast<std::size_t>(e)] != 0; }
  bool face_alive(int f) const { return face_alive_[static_cast<std::size_t>(f)] != 0; }
  const Word& face_word(int f) const { return words_[static_cast<std::size_t>(f)]; }
  std::vector<int> alive_edges() const;
  std::vector<int> alive_faces() const;

  // (vertex, edge) collapse: delete the edge, erasing its occurrences
  void kill_tree_edge(int e);
  // (edge, face) collapse: the edge must occur exactly once in the face word
  // (OccurrenceViolation otherwise — a hard error, the trial must abort);
  // its equivalent expression replaces the edge everywhere else.
  void collapse(int e, int f);

  const std::vector<CollapseStep>& log() const { return log_; }

 private:
  const Complex2* complex_;
  std::vector<char> edge_alive_, face_alive_;
  std::vector<Word> words_;
  std::vector<CollapseStep> log_;
};

// Throws NotASpanningTree unless the closed cells of the (vertex, edge) pairs
// form a spanning tree of the 1-skeleton.
void check_spanning_tree(const Complex2& c, const FacePoset& x,
                         const std::vector<std::pair<int, int>>& m0);

// Q0: the standard presentation of C/T for the spanning tree T induced by the
// dim-(0,1) pairs of M. Generators are the non-tree edges, one relator per
// 2-cell (tree letters erased), relator i coming from face q0_face_of[i].
struct TreeQuotient {
  CombinatorialState state;
  Presentation q0;
  std::vector<int> q0_gen_edges;  // generator -> complex edge index
  std::vector<int> q0_face_of;    // relator -> complex face index
};
TreeQuotient tree_quotient(const Complex2& c, const FacePoset& x, const Matching& m);

// The Morse presentation: tree quotient, then one internal collapse per
// dim-(1,2) pair in ascending edge-id order. Requires M acyclic with exactly
// one critical 0-cell.
Presentation morse_presentation(const Complex2& c, const FacePoset& x, const Matching& m,
                                std::string origin = {});
Presentation morse_presentation(const Presentation& p, const Matching& m);

struct MorseComplexResult {
  std::vector<std::string> critical_edges;
  std::vector<std::pair<std::string, Word>> critical_faces;  // (face id, word over edge indices)
};
// Generic-complex variant of morse_presentation; same engine, no presentation.
MorseComplexResult morse_complex(const Complex2& c, const FacePoset& x, const Matching& m);

// Render a state/engine word whose letters are complex edge indices.
std::string edge_word_text(const Complex2& c, const Word& w);

// Generator name for an edge cell id, e.g. "e:x:1" -> "e_x_1".
std::string sanitize_cell_id(const std::string& id);

}  // namespace morsepres
