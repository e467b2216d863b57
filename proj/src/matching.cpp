#include "morsepres/matching.hpp"

#include <algorithm>
#include <sstream>

namespace morsepres {

void Matching::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::vector<std::pair<int, int>> Matching::dim_pairs(const FacePoset& x, int d) const {
  std::vector<std::pair<int, int>> out;
  for (auto [lo, hi] : pairs)
    if (x.dim(lo) == d) out.emplace_back(lo, hi);
  return out;
}

bool Matching::matched(int cell) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const auto& pr) { return pr.first == cell || pr.second == cell; });
}

namespace {
void check_matching(const FacePoset& x, const Matching& m) {
  std::vector<char> used(x.size(), 0);
  for (auto [lo, hi] : m.pairs) {
    if (lo < 0 || hi < 0 || lo >= static_cast<int>(x.size()) || hi >= static_cast<int>(x.size()))
      throw NotAMatching("pair references unknown cell");
    if (!x.covers(lo, hi))
      throw NotAMatching("pair (" + x.ids()[static_cast<std::size_t>(lo)] + ", " +
                         x.ids()[static_cast<std::size_t>(hi)] + ") is not a cover relation");
    for (int c : {lo, hi}) {
      if (used[static_cast<std::size_t>(c)])
        throw NotAMatching("cell in two pairs: " + x.ids()[static_cast<std::size_t>(c)]);
      used[static_cast<std::size_t>(c)] = 1;
    }
  }
}

// Kahn over the Hasse digraph with matched cover edges reversed. Returns the
// number of emitted cells (== size iff acyclic).
std::size_t modified_hasse_topsort(const FacePoset& x, const Matching& m, std::vector<int>* order) {
  const std::size_t n = x.size();
  // partner[c] = matched partner covering/covered by c, if the cover (c, partner) is in m
  std::vector<int> up_partner(n, -1), down_partner(n, -1);
  for (auto [lo, hi] : m.pairs) {
    up_partner[static_cast<std::size_t>(lo)] = hi;
    down_partner[static_cast<std::size_t>(hi)] = lo;
  }
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  auto add_arc = [&](int a, int b) {
    succ[static_cast<std::size_t>(a)].push_back(b);
    ++indegree[static_cast<std::size_t>(b)];
  };
  for (int lo = 0; lo < static_cast<int>(n); ++lo)
    for (int hi : x.up(lo)) {
      if (up_partner[static_cast<std::size_t>(lo)] == hi)
        add_arc(lo, hi);  // matched: reversed, points upward
      else
        add_arc(hi, lo);  // regular Hasse arc, points downward
    }
  std::vector<int> ready;
  for (std::size_t c = 0; c < n; ++c)
    if (indegree[c] == 0) ready.push_back(static_cast<int>(c));
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const int c = ready.back();
    ready.pop_back();
    ++emitted;
    if (order) order->push_back(c);
    for (int s : succ[static_cast<std::size_t>(c)])
      if (--indegree[static_cast<std::size_t>(s)] == 0) ready.push_back(s);
  }
  return emitted;
}
}  // namespace

bool is_acyclic(const FacePoset& x, const Matching& m) {
  check_matching(x, m);
  return modified_hasse_topsort(x, m, nullptr) == x.size();
}

std::array<std::vector<int>, 3> critical_cells(const FacePoset& x, const Matching& m) {
  std::vector<char> used(x.size(), 0);
  for (auto [lo, hi] : m.pairs) {
    used[static_cast<std::size_t>(lo)] = 1;
    used[static_cast<std::size_t>(hi)] = 1;
  }
  std::array<std::vector<int>, 3> out;
  for (int c = 0; c < static_cast<int>(x.size()); ++c)
    if (!used[static_cast<std::size_t>(c)]) out[static_cast<std::size_t>(x.dim(c))].push_back(c);
  return out;
}

Matching spanning_matching(const FacePoset& x, Rng& rng) {
  Matching m;
  const std::vector<int> verts = x.cells_of_dim(0);
  if (!verts.empty()) {
    // randomized DFS spanning tree; a vertex pairs with the edge that reached it
    const int root = verts[static_cast<std::size_t>(rng.below(verts.size()))];
    std::vector<char> seen(x.size(), 0);
    std::vector<std::pair<int, int>> stack{{root, -1}};  // (vertex, via edge)
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (via >= 0) m.pairs.emplace_back(v, via);
      std::vector<int> incident = x.up(v);
      rng.shuffle(incident);
      for (int e : incident)
        for (int w : x.down(e))
          if (w != v && !seen[static_cast<std::size_t>(w)]) stack.emplace_back(w, e);
    }
    for (int v : verts)
      if (!seen[static_cast<std::size_t>(v)])
        throw Error("spanning_matching requires a connected complex");
  }
  // face phase: greedy random pairing, re-testing acyclicity per candidate
  std::vector<char> edge_used(x.size(), 0);
  for (auto [lo, hi] : m.pairs) edge_used[static_cast<std::size_t>(hi)] = 1;
  std::vector<int> faces = x.cells_of_dim(2);
  rng.shuffle(faces);
  for (int f : faces) {
    std::vector<int> candidates;
    for (int e : x.down(f))
      if (!edge_used[static_cast<std::size_t>(e)]) candidates.push_back(e);
    rng.shuffle(candidates);
    for (int e : candidates) {
      m.pairs.emplace_back(e, f);
      if (is_acyclic(x, m)) {
        edge_used[static_cast<std::size_t>(e)] = 1;
        break;
      }
      m.pairs.pop_back();
    }
  }
  m.normalize();
  return m;
}

std::vector<int> morse_labeling(const FacePoset& x, const Matching& m) {
  check_matching(x, m);
  const std::size_t n = x.size();
  // contract matched pairs into nodes, topologically sort with dimension priority
  std::vector<int> node_of(n);
  std::vector<std::vector<int>> members;
  {
    std::vector<char> used(n, 0);
    for (auto [lo, hi] : m.pairs) {
      node_of[static_cast<std::size_t>(lo)] = node_of[static_cast<std::size_t>(hi)] =
          static_cast<int>(members.size());
      members.push_back({lo, hi});
      used[static_cast<std::size_t>(lo)] = used[static_cast<std::size_t>(hi)] = 1;
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c]) {
        node_of[c] = static_cast<int>(members.size());
        members.push_back({static_cast<int>(c)});
      }
  }
  const std::size_t nn = members.size();
  // rank: 0-cells and (0,1)-pairs, then critical edges, then (1,2)-pairs, then critical faces
  std::vector<int> rank(nn);
  for (std::size_t v = 0; v < nn; ++v) {
    const auto& mem = members[v];
    const int lodim = x.dim(mem.front());
    rank[v] = mem.size() == 2 ? 2 * lodim + 1 : 2 * lodim;
  }
  std::vector<std::vector<int>> succ(nn);
  std::vector<int> indegree(nn, 0);
  for (int lo = 0; lo < static_cast<int>(n); ++lo)
    for (int hi : x.up(lo)) {
      const int a = node_of[static_cast<std::size_t>(lo)], b = node_of[static_cast<std::size_t>(hi)];
      if (a == b) continue;
      succ[static_cast<std::size_t>(a)].push_back(b);  // lower cells get smaller labels
      ++indegree[static_cast<std::size_t>(b)];
    }
  // Kahn with (rank, smallest member cell) priority for determinism
  std::vector<int> ready;
  auto push_ready = [&](int v) { ready.push_back(v); };
  for (std::size_t v = 0; v < nn; ++v)
    if (indegree[v] == 0) push_ready(static_cast<int>(v));
  std::vector<int> label(n, -1);
  int next_label = 1;
  std::size_t emitted = 0;
  while (!ready.empty()) {
    auto best = std::min_element(ready.begin(), ready.end(), [&](int a, int b) {
      if (rank[static_cast<std::size_t>(a)] != rank[static_cast<std::size_t>(b)])
        return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
      return members[static_cast<std::size_t>(a)].front() < members[static_cast<std::size_t>(b)].front();
    });
    const int v = *best;
    ready.erase(best);
    for (int cell : members[static_cast<std::size_t>(v)]) label[static_cast<std::size_t>(cell)] = next_label;
    ++next_label;
    ++emitted;
    for (int s : succ[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(s)] == 0) push_ready(s);
  }
  if (emitted != nn) throw CyclicMatching("matching induces a cycle; no Morse labeling exists");
  return label;
}

std::string matching_text(const FacePoset& x, const Matching& m) {
  std::vector<std::string> lines;
  lines.reserve(m.pairs.size());
  for (auto [lo, hi] : m.pairs)
    lines.push_back(x.ids()[static_cast<std::size_t>(lo)] + " " + x.ids()[static_cast<std::size_t>(hi)]);
  std::sort(lines.begin(), lines.end());
  std::ostringstream os;
  for (const auto& l : lines) os << l << '\n';
  return os.str();
}

Matching parse_matching(const FacePoset& x, const std::string& text) {
  Matching m;
  std::istringstream in(text);
  std::string lo, hi;
  while (in >> lo >> hi) {
    const int a = x.index_of(lo), b = x.index_of(hi);
    if (a < 0 || b < 0)
      throw StaleCertificate("matching references unknown cell: " + (a < 0 ? lo : hi));
    m.pairs.emplace_back(a, b);
  }
  m.normalize();
  return m;
}

}  // namespace morsepres
