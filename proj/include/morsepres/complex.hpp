#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morsepres/presentation.hpp"

namespace morsepres {

// Regular combinatorial 2-complex. Cells carry string ids; presentation-derived
// complexes use the canonical scheme
//   v:o  v:g:<gen>  v:r<i>     e:<gen>:1  e:<gen>:2  e:r<i>:t<t>   f:r<i>:t<t>
// which certificates depend on bit-exactly.
class Complex2 {
 public:
  struct Edge {
    std::string id;
    int src = -1, dst = -1;  // vertex indices; loops are rejected
  };
  struct Face {
    std::string id;
    std::vector<std::pair<int, int>> boundary;  // (edge index, +1/-1), a closed path
  };

  int add_vertex(std::string id);
  int add_edge(std::string id, int src, int dst);
  int add_face(std::string id, std::vector<std::pair<int, int>> boundary);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int face_index(const std::string& id) const;

  // boundary of a face as a word over edge indices
  Word boundary_word(int face) const;

  long long cell_count() const {
    return static_cast<long long>(vertices_.size() + edges_.size() + faces_.size());
  }
  long long euler_characteristic() const {
    return static_cast<long long>(vertices_.size()) - static_cast<long long>(edges_.size()) +
           static_cast<long long>(faces_.size());
  }
  bool connected() const;

  // closed boundaries, no repeated edge within a face, no revisited vertex,
  // no loop edges; throws RegularityViolation naming the offending cell
  void validate() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::unordered_map<std::string, int> vertex_by_id_, edge_by_id_, face_by_id_;
};

// The subdivided presentation complex X(K'_P): base vertex o, a barycenter per
// generator, an apex per relator, two half-edges per generator, and per relator
// of length L a fan of 2L radial edges and 2L triangles.
// Throws EmptyRelator if some relator is the empty word.
Complex2 presentation_complex(const Presentation& p);

// Face poset of a validated complex: cells ordered vertices, then edges, then
// faces (complex order); covers are vertex-edge and edge-face incidences.
class FacePoset {
 public:
  explicit FacePoset(const Complex2& c);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  int dim(int cell) const { return dims_[static_cast<std::size_t>(cell)]; }
  const std::vector<int>& up(int cell) const { return up_[static_cast<std::size_t>(cell)]; }
  const std::vector<int>& down(int cell) const { return down_[static_cast<std::size_t>(cell)]; }
  int index_of(const std::string& id) const;  // -1 if absent
  bool covers(int lower, int upper) const;
  std::size_t cover_count() const;

  // cell index ranges per dimension, in complex order
  std::vector<int> cells_of_dim(int d) const;

  // offsets into the underlying complex
  int vertex_cell(int v) const { return v; }
  int edge_cell(int e) const { return n_vertices_ + e; }
  int face_cell(int f) const { return n_vertices_ + n_edges_ + f; }
  int edge_of_cell(int cell) const { return cell - n_vertices_; }
  int face_of_cell(int cell) const { return cell - n_vertices_ - n_edges_; }

 private:
  std::vector<std::string> ids_;
  std::vector<int> dims_;
  std::vector<std::vector<int>> up_, down_;
  std::unordered_map<std::string, int> by_id_;
  int n_vertices_ = 0, n_edges_ = 0;
};

FacePoset face_poset(const Complex2& c);

// Line-oriented complex file: "v <id>", "e <id> <src> <dst>",
// "f <id> <±edge> ..."; '#' starts a comment. Validated on load.
Complex2 load_complex(std::istream& in);
Complex2 load_complex_file(const std::string& path);
std::string complex_text(const Complex2& c);

}  // namespace morsepres
