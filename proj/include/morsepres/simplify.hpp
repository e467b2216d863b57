#pragma once

#include "morsepres/presentation.hpp"

namespace morsepres {

struct SimplifyConfig {
  int max_passes = 1000;
  // gates the duplicate-relator rule and empty-relator deletion, the only
  // moves outside (1)-(4); they change the deficiency
  bool allow_duplicate_deletion = true;
  bool log_moves = false;
};

struct SimplifyReport {
  Presentation final;
  MoveLog moves;  // populated when log_moves
  bool used_duplicate_deletion = false;
  bool trivialized = false;  // final == < | >
  int passes = 0;
};

// One search phase: repeatedly find the longest v with a rotation of some
// r1 = u*v and a rotation of some r2 (or r2^-1) = w*v and |u| < |v|, then
// replace r2 by w*u^-1 (freely and cyclically reduced). Relators are
// cyclically reduced on entry. Deterministic scan order.
std::pair<Presentation, bool> search_phase(const Presentation& p);

// One elimination phase: while some generator occurs exactly once in some
// relator, eliminate the lexicographically first such (generator, relator).
std::pair<Presentation, bool> elimination_phase(const Presentation& p);

// The reduction loop: alternate the phases until a full pass changes nothing
// or max_passes is hit.
SimplifyReport simplified(const Presentation& p, const SimplifyConfig& cfg = {});

}  // namespace morsepres
