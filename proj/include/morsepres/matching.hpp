#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "morsepres/complex.hpp"
#include "morsepres/rng.hpp"

namespace morsepres {

// A set of cover-relation cell pairs (lower, upper), no cell in two pairs.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // poset cell indices, kept sorted

  void normalize();  // sort and deduplicate
  // pairs of cells of dimension (d, d+1)
  std::vector<std::pair<int, int>> dim_pairs(const FacePoset& x, int d) const;
  bool matched(int cell) const;
};

// Validates M (covers, disjointness; NotAMatching otherwise), then checks that
// the Hasse diagram with matched edges reversed is acyclic.
bool is_acyclic(const FacePoset& x, const Matching& m);

// Unmatched cells grouped by dimension.
std::array<std::vector<int>, 3> critical_cells(const FacePoset& x, const Matching& m);

// Random acyclic matching with exactly one critical 0-cell: a randomized-DFS
// spanning tree pairs each non-root vertex with its parent edge, then faces are
// visited in random order and paired with a random free boundary edge whenever
// that keeps the matching acyclic.
Matching spanning_matching(const FacePoset& x, Rng& rng);

// Discrete Morse function induced by M: a linear extension in which matched
// pairs are consecutive (sharing one label) and vertex-edge pairs precede
// edge-face pairs. label[cell] for every cell. Throws CyclicMatching.
std::vector<int> morse_labeling(const FacePoset& x, const Matching& m);

// Sorted "lower-id upper-id" lines.
std::string matching_text(const FacePoset& x, const Matching& m);
// Inverse of matching_text; throws StaleCertificate for unknown cell ids.
Matching parse_matching(const FacePoset& x, const std::string& text);

}  // namespace morsepres
