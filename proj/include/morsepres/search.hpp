#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "morsepres/catalog.hpp"
#include "morsepres/matching.hpp"
#include "morsepres/simplify.hpp"

namespace morsepres {

struct Target {
  enum class Kind { Empty, MaxGenerators, Equivalent };
  Kind kind = Kind::Empty;
  int max_generators = 0;
  Presentation reference;  // Equivalent only

  bool satisfied(const Presentation& final) const;
  std::string text() const;
  static Target empty();
  static Target max_gens(int k);
  static Target equivalent(Presentation reference);
};

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 1;
  Target target;
  int jobs = 1;
  bool exhaustive = false;  // run every trial even after a success
};

struct SearchStats {
  std::uint64_t trials_run = 0;
  std::uint64_t occurrence_violations = 0;  // nonzero aborts the run
  int best_generator_count = -1;            // -1 when no trial ran
  std::map<int, std::uint64_t> generator_histogram;  // post-simplification
};

// Replayable witness: (catalog presentation, seed, trial, matching) determine
// the simplified result bit-exactly.
struct Certificate {
  int format = 1;
  CatalogSpec presentation;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  bool used_duplicate_deletion = false;
  std::string matching;  // sorted "lower upper" lines over canonical cell ids
  std::string result;    // presentation text of the simplified output

  std::string text() const;
  static Certificate parse(const std::string& text);
};

struct SearchOutcome {
  std::optional<Certificate> certificate;  // catalog searches only
  std::optional<std::uint64_t> success_trial;
  std::optional<std::string> final_text;  // simplified result of the winning trial
  SearchStats stats;
};

// Builds the complex and poset once, then runs independent seeded trials
// (spanning_matching -> morse_presentation -> simplified -> target test).
// Deterministic: the winner is the success with the smallest trial index and
// statistics cover exactly the trials a sequential run would have executed,
// regardless of cfg.jobs. Per-trial Morse invariants (critical-cell counts,
// invariant-factor preservation) are enforced; violations throw.
SearchOutcome run_search(const Presentation& p, const SearchConfig& cfg,
                         const CatalogSpec* certificate_source = nullptr);
SearchOutcome run_search(const CatalogSpec& spec, const SearchConfig& cfg);

struct ReplayCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReplayReport {
  std::vector<ReplayCheck> checks;
  bool ok() const;
};

// Rebuilds everything from the certificate and verifies: catalog lookup,
// matching cell ids, cover/matching structure, acyclicity, single critical
// vertex, recomputed Morse presentation, bit-exact simplified result, and the
// duplicate-deletion flag.
ReplayReport replay_certificate(const Certificate& cert);

}  // namespace morsepres
