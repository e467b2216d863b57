#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morsepres/matching.hpp"
#include "morsepres/morse.hpp"

namespace morsepres {

// 2x2 regular CW torus: 4 vertices, 8 edges, 4 squares. Critical cells of the
// bundled matching: v1, x4, x6, e10.
Complex2 torus_fixture();
Matching torus_fixture_matching(const FacePoset& x);

struct TorusDemo {
  std::vector<std::pair<std::string, std::string>> steps;  // (label, attaching word of e10)
  std::string final_word;
  std::vector<std::string> critical_edges;
};

// Collapses the matched (edge, face) pairs in the order 9, 8, 7, then the tree
// edges 5, 3, 2, reporting the attaching word of the critical face after each
// stage.
TorusDemo run_torus_demo();

}  // namespace morsepres
