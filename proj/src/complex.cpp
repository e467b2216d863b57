#include "morsepres/complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace morsepres {

namespace {
int insert_id(std::unordered_map<std::string, int>& map, const std::string& id, int idx,
              const char* kind) {
  auto [it, fresh] = map.emplace(id, idx);
  if (!fresh) throw RegularityViolation(std::string("duplicate ") + kind + " id: " + id);
  return idx;
}
}  // namespace

int Complex2::add_vertex(std::string id) {
  const int idx = static_cast<int>(vertices_.size());
  insert_id(vertex_by_id_, id, idx, "vertex");
  vertices_.push_back(std::move(id));
  return idx;
}

int Complex2::add_edge(std::string id, int src, int dst) {
  if (src < 0 || dst < 0 || src >= static_cast<int>(vertices_.size()) ||
      dst >= static_cast<int>(vertices_.size()))
    throw RegularityViolation("edge endpoint out of range: " + id);
  if (src == dst) throw RegularityViolation("loop edge rejected: " + id);
  const int idx = static_cast<int>(edges_.size());
  insert_id(edge_by_id_, id, idx, "edge");
  edges_.push_back({std::move(id), src, dst});
  return idx;
}

int Complex2::add_face(std::string id, std::vector<std::pair<int, int>> boundary) {
  const int idx = static_cast<int>(faces_.size());
  insert_id(face_by_id_, id, idx, "face");
  faces_.push_back({std::move(id), std::move(boundary)});
  return idx;
}

namespace {
int lookup(const std::unordered_map<std::string, int>& map, const std::string& id) {
  auto it = map.find(id);
  return it == map.end() ? -1 : it->second;
}
}  // namespace

int Complex2::vertex_index(const std::string& id) const { return lookup(vertex_by_id_, id); }
int Complex2::edge_index(const std::string& id) const { return lookup(edge_by_id_, id); }
int Complex2::face_index(const std::string& id) const { return lookup(face_by_id_, id); }

Word Complex2::boundary_word(int face) const {
  std::vector<Letter> raw;
  for (auto [e, s] : faces_[static_cast<std::size_t>(face)].boundary) raw.emplace_back(e, s);
  return Word(std::move(raw));
}

bool Complex2::connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.src)].push_back(e.dst);
    adj[static_cast<std::size_t>(e.dst)].push_back(e.src);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

void Complex2::validate() const {
  for (const Face& f : faces_) {
    if (f.boundary.empty()) throw RegularityViolation("face with empty boundary: " + f.id);
    std::vector<char> edge_seen(edges_.size(), 0);
    std::vector<char> vertex_seen(vertices_.size(), 0);
    int cur = -1, start = -1;
    for (auto [e, s] : f.boundary) {
      if (e < 0 || e >= static_cast<int>(edges_.size()))
        throw RegularityViolation("face references unknown edge: " + f.id);
      if (s != 1 && s != -1) throw RegularityViolation("face boundary sign must be +-1: " + f.id);
      if (edge_seen[static_cast<std::size_t>(e)])
        throw RegularityViolation("edge repeated in face boundary: " + f.id + " / " +
                                  edges_[static_cast<std::size_t>(e)].id);
      edge_seen[static_cast<std::size_t>(e)] = 1;
      const Edge& ed = edges_[static_cast<std::size_t>(e)];
      const int from = s > 0 ? ed.src : ed.dst;
      const int to = s > 0 ? ed.dst : ed.src;
      if (cur < 0)
        start = from;
      else if (from != cur)
        throw RegularityViolation("face boundary is not a path: " + f.id);
      if (vertex_seen[static_cast<std::size_t>(from)])
        throw RegularityViolation("vertex revisited in face boundary: " + f.id + " / " +
                                  vertices_[static_cast<std::size_t>(from)]);
      vertex_seen[static_cast<std::size_t>(from)] = 1;
      cur = to;
    }
    if (cur != start) throw RegularityViolation("face boundary is not closed: " + f.id);
  }
}

Complex2 presentation_complex(const Presentation& p) {
  p.validate();
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].empty())
      throw EmptyRelator("relator " + std::to_string(i) + " is the empty word");

  Complex2 c;
  const int o = c.add_vertex("v:o");
  std::vector<int> bary(p.generators.size());
  std::vector<int> half1(p.generators.size()), half2(p.generators.size());
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    bary[g] = c.add_vertex("v:g:" + p.generators[g]);
    half1[g] = c.add_edge("e:" + p.generators[g] + ":1", o, bary[g]);
    half2[g] = c.add_edge("e:" + p.generators[g] + ":2", bary[g], o);
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    const std::size_t len2 = 2 * r.size();
    const std::string ri = "r" + std::to_string(i);
    const int apex = c.add_vertex("v:" + ri);
    std::vector<int> radial(len2);
    for (std::size_t t = 0; t < len2; ++t) {
      // corners alternate o, barycenter of the t/2-th letter
      const int corner = t % 2 == 0 ? o : bary[static_cast<std::size_t>(r[t / 2].gen)];
      radial[t] = c.add_edge("e:" + ri + ":t" + std::to_string(t), apex, corner);
    }
    for (std::size_t t = 0; t < len2; ++t) {
      const Letter l = r[t / 2];
      const std::size_t g = static_cast<std::size_t>(l.gen);
      int half, hsign;
      if (l.sign > 0) {
        half = t % 2 == 0 ? half1[g] : half2[g];
        hsign = +1;
      } else {
        half = t % 2 == 0 ? half2[g] : half1[g];
        hsign = -1;
      }
      c.add_face("f:" + ri + ":t" + std::to_string(t),
                 {{radial[t], +1}, {half, hsign}, {radial[(t + 1) % len2], -1}});
    }
  }
  c.validate();
  return c;
}

FacePoset::FacePoset(const Complex2& c) {
  c.validate();
  n_vertices_ = static_cast<int>(c.vertices().size());
  n_edges_ = static_cast<int>(c.edges().size());
  const int n_faces = static_cast<int>(c.faces().size());
  const int total = n_vertices_ + n_edges_ + n_faces;
  ids_.reserve(static_cast<std::size_t>(total));
  for (const auto& v : c.vertices()) ids_.push_back(v);
  for (const auto& e : c.edges()) ids_.push_back(e.id);
  for (const auto& f : c.faces()) ids_.push_back(f.id);
  dims_.assign(static_cast<std::size_t>(total), 0);
  up_.assign(static_cast<std::size_t>(total), {});
  down_.assign(static_cast<std::size_t>(total), {});
  for (int i = 0; i < total; ++i) {
    by_id_.emplace(ids_[static_cast<std::size_t>(i)], i);
    dims_[static_cast<std::size_t>(i)] = i < n_vertices_ ? 0 : i < n_vertices_ + n_edges_ ? 1 : 2;
  }
  auto add_cover = [&](int lo, int hi) {
    up_[static_cast<std::size_t>(lo)].push_back(hi);
    down_[static_cast<std::size_t>(hi)].push_back(lo);
  };
  for (int e = 0; e < n_edges_; ++e) {
    const auto& ed = c.edges()[static_cast<std::size_t>(e)];
    add_cover(vertex_cell(ed.src), edge_cell(e));
    add_cover(vertex_cell(ed.dst), edge_cell(e));
  }
  for (int f = 0; f < n_faces; ++f)
    for (auto [e, s] : c.faces()[static_cast<std::size_t>(f)].boundary)
      add_cover(edge_cell(e), face_cell(f));
}

int FacePoset::index_of(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? -1 : it->second;
}

bool FacePoset::covers(int lower, int upper) const {
  const auto& ups = up_[static_cast<std::size_t>(lower)];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::size_t FacePoset::cover_count() const {
  std::size_t n = 0;
  for (const auto& u : up_) n += u.size();
  return n;
}

std::vector<int> FacePoset::cells_of_dim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (dims_[static_cast<std::size_t>(i)] == d) out.push_back(i);
  return out;
}

FacePoset face_poset(const Complex2& c) { return FacePoset(c); }

// --- file format ---------------------------------------------------------

Complex2 load_complex(std::istream& in) {
  Complex2 c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (kind == "v") {
      std::string id;
      if (!(ls >> id)) throw fail("v needs an id");
      c.add_vertex(id);
    } else if (kind == "e") {
      std::string id, src, dst;
      if (!(ls >> id >> src >> dst)) throw fail("e needs id src dst");
      const int s = c.vertex_index(src), d = c.vertex_index(dst);
      if (s < 0 || d < 0) throw fail("edge endpoint not declared: " + id);
      c.add_edge(id, s, d);
    } else if (kind == "f") {
      std::string id, tok;
      if (!(ls >> id)) throw fail("f needs an id");
      std::vector<std::pair<int, int>> bd;
      while (ls >> tok) {
        int sign = +1;
        if (tok[0] == '+' || tok[0] == '-') {
          sign = tok[0] == '-' ? -1 : +1;
          tok.erase(0, 1);
        }
        const int e = c.edge_index(tok);
        if (e < 0) throw fail("face references undeclared edge: " + tok);
        bd.emplace_back(e, sign);
      }
      c.add_face(id, std::move(bd));
    } else {
      throw fail("unknown record '" + kind + "'");
    }
    std::string extra;
    if (kind != "f" && (ls >> extra)) throw fail("trailing tokens");
  }
  c.validate();
  return c;
}

Complex2 load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file: " + path);
  return load_complex(in);
}

std::string complex_text(const Complex2& c) {
  std::ostringstream os;
  for (const auto& v : c.vertices()) os << "v " << v << '\n';
  for (const auto& e : c.edges())
    os << "e " << e.id << ' ' << c.vertices()[static_cast<std::size_t>(e.src)] << ' '
       << c.vertices()[static_cast<std::size_t>(e.dst)] << '\n';
  for (const auto& f : c.faces()) {
    os << "f " << f.id;
    for (auto [e, s] : f.boundary)
      os << ' ' << (s > 0 ? '+' : '-') << c.edges()[static_cast<std::size_t>(e)].id;
    os << '\n';
  }
  return os.str();
}

}  // namespace morsepres
