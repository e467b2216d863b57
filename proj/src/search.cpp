#include "morsepres/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "morsepres/morse.hpp"

namespace morsepres {

bool Target::satisfied(const Presentation& final) const {
  switch (kind) {
    case Kind::Empty:
      return final.generators.empty() && final.relators.empty();
    case Kind::MaxGenerators:
      return static_cast<int>(final.generators.size()) <= max_generators;
    case Kind::Equivalent:
      if (final.generators.size() != reference.generators.size() ||
          final.relators.size() != reference.relators.size())
        return false;
      return canonical_equivalence(final, reference);
  }
  return false;
}

std::string Target::text() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::MaxGenerators: return "gens:" + std::to_string(max_generators);
    case Kind::Equivalent: return "equiv:" + to_text(reference);
  }
  return "?";
}

Target Target::empty() { return {}; }
Target Target::max_gens(int k) {
  Target t;
  t.kind = Kind::MaxGenerators;
  t.max_generators = k;
  return t;
}
Target Target::equivalent(Presentation reference) {
  Target t;
  t.kind = Kind::Equivalent;
  t.reference = std::move(reference);
  return t;
}

namespace {

struct TrialRecord {
  std::uint64_t index = 0;
  int generators = 0;
  bool success = false;
  bool occurrence_violation = false;
  // stored only for successes
  std::string matching_text;
  std::string final_text;
  bool used_duplicate_deletion = false;
};

TrialRecord run_trial(const Complex2& c, const FacePoset& x, const Presentation& p,
                      const std::vector<long long>& base_factors, const SearchConfig& cfg,
                      std::uint64_t index) {
  TrialRecord rec;
  rec.index = index;
  Rng rng(derive_stream(cfg.seed, index));
  const Matching m = spanning_matching(x, rng);
  Presentation q;
  try {
    q = morse_presentation(c, x, m, "morse(" + p.origin + ")");
  } catch (const OccurrenceViolation&) {
    rec.occurrence_violation = true;
    return rec;
  }
  // per-trial invariants: count contract and invariant-factor preservation
  const auto crit = critical_cells(x, m);
  if (q.generators.size() != crit[1].size() || q.relators.size() != crit[2].size())
    throw Error("trial " + std::to_string(index) +
                ": Morse presentation size disagrees with critical cells");
  if (nonunit_factors(smith_normal_form(abelianization_matrix(q))) != base_factors)
    throw Error("trial " + std::to_string(index) + ": abelianization invariant factors changed");

  const SimplifyReport rep = simplified(q);
  rec.generators = static_cast<int>(rep.final.generators.size());
  rec.success = cfg.target.satisfied(rep.final);
  if (rec.success) {
    rec.matching_text = matching_text(x, m);
    rec.final_text = to_text(rep.final);
    rec.used_duplicate_deletion = rep.used_duplicate_deletion;
  }
  return rec;
}

}  // namespace

SearchOutcome run_search(const Presentation& p, const SearchConfig& cfg,
                         const CatalogSpec* certificate_source) {
  if (cfg.max_trials < 1) throw Error("max_trials must be at least 1");
  p.validate();
  const Complex2 c = presentation_complex(p);
  const FacePoset x(c);
  const auto base_factors = nonunit_factors(smith_normal_form(abelianization_matrix(p)));

  std::vector<TrialRecord> records;
  std::mutex mu;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> stop_after{cfg.max_trials};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= cfg.max_trials || i > stop_after.load()) return;
      if (i > 0 && i % 100000 == 0) std::fprintf(stderr, "search: %llu trials...\n",
                                                 static_cast<unsigned long long>(i));
      TrialRecord rec;
      try {
        rec = run_trial(c, x, p, base_factors, cfg, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        stop_after.store(0);
        return;
      }
      if (rec.success && !cfg.exhaustive) {
        std::uint64_t cur = stop_after.load();
        while (i < cur && !stop_after.compare_exchange_weak(cur, i)) {
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      records.push_back(std::move(rec));
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) { return a.index < b.index; });
  // the trials a sequential early-stopping run would have executed
  std::optional<std::uint64_t> winner;
  for (const TrialRecord& r : records)
    if (r.success) {
      winner = r.index;
      break;
    }
  const std::uint64_t last =
      (winner && !cfg.exhaustive) ? *winner : (records.empty() ? 0 : records.back().index);

  SearchOutcome out;
  for (const TrialRecord& r : records) {
    if (r.index > last) continue;
    ++out.stats.trials_run;
    if (r.occurrence_violation) {
      ++out.stats.occurrence_violations;
      continue;
    }
    ++out.stats.generator_histogram[r.generators];
    if (out.stats.best_generator_count < 0 || r.generators < out.stats.best_generator_count)
      out.stats.best_generator_count = r.generators;
  }
  if (out.stats.occurrence_violations > 0)
    throw Error("occurrence violation during search: acyclic matching invariant broken");
  if (winner) {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const TrialRecord& r) { return r.index == *winner; });
    out.success_trial = *winner;
    out.final_text = it->final_text;
    if (certificate_source) {
      Certificate cert;
      cert.presentation = *certificate_source;
      cert.seed = cfg.seed;
      cert.trial = *winner;
      cert.used_duplicate_deletion = it->used_duplicate_deletion;
      cert.matching = it->matching_text;
      cert.result = it->final_text;
      out.certificate = std::move(cert);
    }
  }
  return out;
}

SearchOutcome run_search(const CatalogSpec& spec, const SearchConfig& cfg) {
  const Presentation p = catalog(spec);
  return run_search(p, cfg, &spec);
}

// --- certificate text format ---------------------------------------------

std::string Certificate::text() const {
  std::ostringstream os;
  os << "morsepres-certificate " << format << '\n';
  os << "presentation: " << catalog_spec_text(presentation) << '\n';
  os << "seed: " << seed << '\n';
  os << "trial: " << trial << '\n';
  os << "duplicate-deletion: " << (used_duplicate_deletion ? "true" : "false") << '\n';
  os << "result: " << result << '\n';
  os << "matching:\n" << matching;
  return os.str();
}

Certificate Certificate::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("morsepres-certificate ", 0) != 0)
    throw ParseError("not a certificate file");
  Certificate cert;
  cert.format = std::stoi(line.substr(22));
  if (cert.format != 1) throw StaleCertificate("unsupported certificate format");
  bool in_matching = false;
  std::ostringstream matching;
  while (std::getline(in, line)) {
    if (in_matching) {
      if (!line.empty()) matching << line << '\n';
      continue;
    }
    if (line == "matching:") {
      in_matching = true;
      continue;
    }
    const auto colon = line.find(": ");
    if (colon == std::string::npos) {
      if (line.empty()) continue;
      throw ParseError("bad certificate line: " + line);
    }
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 2);
    if (key == "presentation")
      cert.presentation = parse_catalog_spec(value);
    else if (key == "seed")
      cert.seed = std::stoull(value);
    else if (key == "trial")
      cert.trial = std::stoull(value);
    else if (key == "duplicate-deletion")
      cert.used_duplicate_deletion = value == "true";
    else if (key == "result")
      cert.result = value;
    else
      throw ParseError("unknown certificate key: " + key);
  }
  cert.matching = matching.str();
  return cert;
}

// --- replay ----------------------------------------------------------------

bool ReplayReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReplayCheck& c) { return c.pass; });
}

ReplayReport replay_certificate(const Certificate& cert) {
  ReplayReport report;
  auto record = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  };

  Presentation p;
  try {
    p = catalog(cert.presentation);
    record("catalog", true);
  } catch (const Error& e) {
    record("catalog", false, e.what());
    return report;
  }
  const Complex2 c = presentation_complex(p);
  const FacePoset x(c);

  Matching m;
  try {
    m = parse_matching(x, cert.matching);
    record("matching-cells", true);
  } catch (const StaleCertificate& e) {
    record("matching-cells", false, e.what());
    return report;
  }
  bool acyclic = false;
  try {
    acyclic = is_acyclic(x, m);
    record("matching-covers", true);
  } catch (const NotAMatching& e) {
    record("matching-covers", false, e.what());
    return report;
  }
  if (!record("acyclic", acyclic, acyclic ? "" : "reversed Hasse diagram has a cycle")) return report;
  const auto crit = critical_cells(x, m);
  if (!record("one-critical-vertex", crit[0].size() == 1,
              "critical 0-cells: " + std::to_string(crit[0].size())))
    return report;

  Presentation q;
  try {
    q = morse_presentation(c, x, m);
    record("morse-presentation", true);
  } catch (const Error& e) {
    record("morse-presentation", false, e.what());
    return report;
  }
  const SimplifyReport rep = simplified(q);
  const std::string final_text = to_text(rep.final);
  record("simplified-match", final_text == cert.result,
         final_text == cert.result ? "" : "recomputed " + final_text + " != stored " + cert.result);
  record("duplicate-flag", rep.used_duplicate_deletion == cert.used_duplicate_deletion);
  return report;
}

}  // namespace morsepres
