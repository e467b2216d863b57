#include <cctype>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "morsepres/catalog.hpp"
#include "morsepres/complex.hpp"
#include "morsepres/matching.hpp"
#include "morsepres/morse.hpp"
#include "morsepres/presentation.hpp"
#include "morsepres/search.hpp"
#include "morsepres/simplify.hpp"
#include "morsepres/torus_demo.hpp"

namespace mp = morsepres;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mp::ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trimmed(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

// inline "<...>" text, catalog spec "AK(2)", or a file containing the text
mp::Presentation resolve_presentation(const std::string& arg) {
  const std::string a = trimmed(arg);
  if (!a.empty() && a.front() == '<') return mp::parse_presentation(a);
  const auto fams = mp::catalog_families();
  const std::string head = a.substr(0, a.find('('));
  if (std::find(fams.begin(), fams.end(), head) != fams.end())
    return mp::catalog(mp::parse_catalog_spec(a));
  return mp::parse_presentation(trimmed(slurp(a)));
}

json stats_json(const mp::Presentation& p) {
  const auto s = mp::stats(p);
  json j{{"generators", s.generators},
         {"relators", s.relators},
         {"total-length", s.total_length},
         {"deficiency", s.deficiency},
         {"balanced", s.balanced()}};
  j["invariant-factors"] = mp::smith_normal_form(mp::abelianization_matrix(p));
  if (!p.has_empty_relator())
    j["cells"] = 1 + 3 * static_cast<long long>(s.generators) + s.relators + 4 * s.total_length;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mp::Error("cannot write file: " + path);
  out << content;
}

int cmd_catalog(const std::string& family, const std::vector<long>& params, bool as_json) {
  const mp::Presentation p = mp::catalog(family, params);
  if (as_json) {
    std::cout << json{{"presentation", mp::to_text(p)}, {"stats", stats_json(p)}}.dump(2) << '\n';
  } else {
    std::cout << mp::to_text(p) << '\n';
  }
  return 0;
}

int cmd_stats(const std::string& arg, bool as_json) {
  const mp::Presentation p = resolve_presentation(arg);
  const json j = stats_json(p);
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "generators: " << j["generators"] << "\nrelators: " << j["relators"]
            << "\ntotal-length: " << j["total-length"] << "\ndeficiency: " << j["deficiency"]
            << "\nbalanced: " << (j["balanced"].get<bool>() ? "true" : "false")
            << "\ninvariant-factors:";
  for (const auto& d : j["invariant-factors"]) std::cout << ' ' << d;
  std::cout << '\n';
  if (j.contains("cells")) std::cout << "cells: " << j["cells"] << '\n';
  return 0;
}

int cmd_complex(const std::string& arg, const std::string& load, const std::string& dump,
                bool as_json) {
  mp::Complex2 c;
  if (!load.empty())
    c = mp::load_complex_file(load);
  else
    c = mp::presentation_complex(resolve_presentation(arg));
  const mp::FacePoset x(c);
  if (!dump.empty()) write_file(dump, mp::complex_text(c));
  json j{{"vertices", c.vertices().size()},
         {"edges", c.edges().size()},
         {"faces", c.faces().size()},
         {"cells", c.cell_count()},
         {"cover-relations", x.cover_count()},
         {"euler-characteristic", c.euler_characteristic()},
         {"connected", c.connected()}};
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "vertices: " << c.vertices().size() << "\nedges: " << c.edges().size()
              << "\nfaces: " << c.faces().size() << "\ncells: " << c.cell_count()
              << "\neuler-characteristic: " << c.euler_characteristic() << '\n';
  }
  return 0;
}

int cmd_simplify(const std::string& arg, bool no_dup, bool log_moves, int max_passes, bool as_json) {
  const mp::Presentation p = resolve_presentation(arg);
  mp::SimplifyConfig cfg;
  cfg.allow_duplicate_deletion = !no_dup;
  cfg.log_moves = log_moves;
  cfg.max_passes = max_passes;
  const mp::SimplifyReport rep = mp::simplified(p, cfg);
  if (as_json) {
    json j{{"final", mp::to_text(rep.final)},
           {"trivialized", rep.trivialized},
           {"used-duplicate-deletion", rep.used_duplicate_deletion},
           {"passes", rep.passes},
           {"stats", stats_json(rep.final)}};
    if (log_moves) {
      json moves = json::array();
      mp::Presentation cur = p;
      for (const auto& m : rep.moves) {
        moves.push_back(mp::move_text(m, cur));
        cur = mp::apply_move(std::move(cur), m);
      }
      j["moves"] = std::move(moves);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "final: " << mp::to_text(rep.final) << '\n'
            << "trivialized: " << (rep.trivialized ? "true" : "false") << '\n'
            << "used-duplicate-deletion: " << (rep.used_duplicate_deletion ? "true" : "false") << '\n'
            << "passes: " << rep.passes << '\n';
  if (log_moves) {
    mp::Presentation cur = p;
    for (const auto& m : rep.moves) {
      std::cout << "move: " << mp::move_text(m, cur) << '\n';
      cur = mp::apply_move(std::move(cur), m);
    }
  }
  return 0;
}

mp::Matching resolve_matching(const mp::FacePoset& x, const std::string& spec) {
  const bool seedform = !spec.empty() && spec.find(':') != std::string::npos &&
                        std::all_of(spec.begin(), spec.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ':'; });
  if (seedform) {
    const auto colon = spec.find(':');
    const std::uint64_t seed = std::stoull(spec.substr(0, colon));
    const std::uint64_t trial = std::stoull(spec.substr(colon + 1));
    mp::Rng rng(mp::derive_stream(seed, trial));
    return mp::spanning_matching(x, rng);
  }
  return mp::parse_matching(x, slurp(spec));
}

int cmd_morse(const std::string& arg, const std::string& matching_spec, bool print_q0, bool trace,
              const std::string& dump_matching, bool as_json) {
  const mp::Presentation p = resolve_presentation(arg);
  const mp::Complex2 c = mp::presentation_complex(p);
  const mp::FacePoset x(c);
  const mp::Matching m = resolve_matching(x, matching_spec);
  if (!dump_matching.empty()) write_file(dump_matching, mp::matching_text(x, m));
  const mp::Presentation q = mp::morse_presentation(c, x, m, "morse(" + mp::to_text(p) + ")");
  if (trace) {
    // one line per internal collapse, in the engine's processing order
    mp::TreeQuotient tq = mp::tree_quotient(c, x, m);
    auto m1 = m.dim_pairs(x, 1);
    std::sort(m1.begin(), m1.end(), [&](const auto& a, const auto& b) {
      return c.edges()[static_cast<std::size_t>(x.edge_of_cell(a.first))].id <
             c.edges()[static_cast<std::size_t>(x.edge_of_cell(b.first))].id;
    });
    for (auto [lo, hi] : m1) tq.state.collapse(x.edge_of_cell(lo), x.face_of_cell(hi));
    for (const auto& step : tq.state.log())
      std::cout << "collapse " << step.edge << ' ' << step.face
                << " expr=" << mp::edge_word_text(c, step.expr) << '\n';
  }
  const auto crit = mp::critical_cells(x, m);
  if (as_json) {
    json j{{"morse-presentation", mp::to_text(q)},
           {"critical-cells",
            {{"vertices", crit[0].size()}, {"edges", crit[1].size()}, {"faces", crit[2].size()}}},
           {"matching", mp::matching_text(x, m)},
           {"stats", stats_json(q)}};
    if (print_q0) j["q0"] = mp::to_text(mp::tree_quotient(c, x, m).q0);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (print_q0) std::cout << "q0: " << mp::to_text(mp::tree_quotient(c, x, m).q0) << '\n';
  std::cout << mp::to_text(q) << '\n';
  return 0;
}

mp::Target resolve_target(const std::string& text) {
  if (text == "empty") return mp::Target::empty();
  if (text.rfind("gens:", 0) == 0) return mp::Target::max_gens(std::stoi(text.substr(5)));
  if (text.rfind("equiv:", 0) == 0) return mp::Target::equivalent(resolve_presentation(text.substr(6)));
  throw mp::BadParams("bad target (want empty | gens:K | equiv:<presentation>): " + text);
}

json stats_to_json(const mp::SearchStats& s) {
  json hist = json::object();
  for (const auto& [gens, count] : s.generator_histogram) hist[std::to_string(gens)] = count;
  return json{{"trials-run", s.trials_run},
              {"occurrence-violations", s.occurrence_violations},
              {"best-generator-count", s.best_generator_count},
              {"generator-histogram", std::move(hist)}};
}

int cmd_search(const std::string& arg, std::uint64_t seed, std::uint64_t max_trials,
               const std::string& target_text, int jobs, bool exhaustive, const std::string& out,
               bool as_json) {
  mp::SearchConfig cfg;
  cfg.seed = seed;
  cfg.max_trials = max_trials;
  cfg.target = resolve_target(target_text);
  cfg.jobs = jobs;
  cfg.exhaustive = exhaustive;

  const std::string a = trimmed(arg);
  const auto fams = mp::catalog_families();
  const std::string head = a.substr(0, a.find('('));
  mp::SearchOutcome outcome;
  if (std::find(fams.begin(), fams.end(), head) != fams.end()) {
    outcome = mp::run_search(mp::parse_catalog_spec(a), cfg);
  } else {
    if (!out.empty())
      throw mp::BadParams("--out requires a catalog presentation (certificates replay from the catalog)");
    outcome = mp::run_search(resolve_presentation(arg), cfg);
  }
  if (outcome.certificate && !out.empty()) write_file(out, outcome.certificate->text());

  if (as_json) {
    json j{{"target", cfg.target.text()}, {"stats", stats_to_json(outcome.stats)}};
    if (outcome.success_trial) {
      j["success-trial"] = *outcome.success_trial;
      j["result"] = *outcome.final_text;
    }
    if (outcome.certificate) j["certificate"] = outcome.certificate->text();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "target: " << cfg.target.text() << '\n'
              << "trials-run: " << outcome.stats.trials_run << '\n'
              << "best-generator-count: " << outcome.stats.best_generator_count << '\n';
    std::cout << "histogram:";
    for (const auto& [gens, count] : outcome.stats.generator_histogram)
      std::cout << ' ' << gens << ':' << count;
    std::cout << '\n';
    if (outcome.success_trial) {
      std::cout << "success-trial: " << *outcome.success_trial << '\n'
                << "result: " << *outcome.final_text << '\n';
      if (outcome.certificate && !out.empty()) std::cout << "certificate: " << out << '\n';
    } else {
      std::cout << "no certificate found\n";
    }
  }
  return outcome.success_trial ? 0 : 1;
}

int cmd_replay(const std::string& path, bool as_json) {
  const mp::Certificate cert = mp::Certificate::parse(slurp(path));
  const mp::ReplayReport report = mp::replay_certificate(cert);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << json{{"ok", report.ok()}, {"checks", std::move(checks)}}.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks)
      std::cout << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL")
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    std::cout << (report.ok() ? "replay ok" : "replay failed") << '\n';
  }
  return report.ok() ? 0 : 1;
}

int cmd_torus_demo(bool as_json) {
  const mp::TorusDemo demo = mp::run_torus_demo();
  if (as_json) {
    json steps = json::array();
    for (const auto& [label, word] : demo.steps) steps.push_back({{"label", label}, {"word", word}});
    std::cout << json{{"steps", std::move(steps)},
                      {"final", demo.final_word},
                      {"critical-edges", demo.critical_edges}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& [label, word] : demo.steps) std::cout << label << ": " << word << '\n';
    std::cout << "critical edges:";
    for (const auto& e : demo.critical_edges) std::cout << ' ' << e;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-Morse exploration of Q**-equivalence for balanced group presentations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output on every subcommand");

  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog presentation");
  std::string family;
  std::vector<long> params;
  catalog_cmd->add_option("family", family, "AK | MS | G | Gtilde | BarmakB | BarmakBprime")
      ->required();
  catalog_cmd->add_option("params", params, "family parameters");

  auto* stats_cmd = app.add_subcommand("stats", "presentation statistics and invariant factors");
  std::string pres_arg;
  stats_cmd->add_option("presentation", pres_arg, "inline <...>, catalog spec, or file")->required();

  auto* complex_cmd = app.add_subcommand("complex", "build or load the subdivided 2-complex");
  std::string complex_pres, complex_load, complex_dump;
  complex_cmd->add_option("presentation", complex_pres, "inline <...>, catalog spec, or file");
  complex_cmd->add_option("--load", complex_load, "load a complex file instead");
  complex_cmd->add_option("--dump", complex_dump, "write the complex file ('-' for stdout)");

  auto* simplify_cmd = app.add_subcommand("simplify", "run the reduction algorithm");
  std::string simplify_pres;
  bool no_dup = false, log_moves = false;
  int max_passes = 1000;
  simplify_cmd->add_option("presentation", simplify_pres)->required();
  simplify_cmd->add_flag("--no-duplicate-deletion", no_dup,
                         "forbid the deficiency-changing duplicate/empty relator rule");
  simplify_cmd->add_flag("--log-moves", log_moves, "record and print the move log");
  simplify_cmd->add_option("--max-passes", max_passes);

  auto* morse_cmd = app.add_subcommand("morse", "Morse presentation for a matching");
  std::string morse_pres, morse_matching;
  bool print_q0 = false, trace = false;
  morse_cmd->add_option("presentation", morse_pres)->required();
  morse_cmd->add_option("--matching", morse_matching, "matching file, or seed:trial")->required();
  morse_cmd->add_flag("--q0", print_q0, "also print the spanning-tree quotient presentation");
  morse_cmd->add_flag("--trace", trace, "print one line per internal collapse");
  std::string dump_matching;
  morse_cmd->add_option("--dump-matching", dump_matching, "write the matching pairs here");

  auto* search_cmd = app.add_subcommand("search", "randomized matching search");
  std::string search_pres, target_text = "empty", out_path;
  std::uint64_t seed = 0, max_trials = 1000;
  int jobs = 1;
  bool exhaustive = false;
  search_cmd->add_option("presentation", search_pres)->required();
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--max-trials", max_trials);
  search_cmd->add_option("--target", target_text, "empty | gens:K | equiv:<presentation>");
  search_cmd->add_option("--jobs", jobs, "parallel trial workers");
  search_cmd->add_flag("--exhaustive", exhaustive, "run all trials even after a success");
  search_cmd->add_option("--out", out_path, "write the certificate here");

  auto* replay_cmd = app.add_subcommand("replay", "verify a certificate");
  std::string cert_path;
  replay_cmd->add_option("certificate", cert_path)->required();

  auto* torus_cmd = app.add_subcommand("torus-demo", "golden internal-collapse sequence on the torus");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();  // --json after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (catalog_cmd->parsed()) return cmd_catalog(family, params, as_json);
    if (stats_cmd->parsed()) return cmd_stats(pres_arg, as_json);
    if (complex_cmd->parsed()) {
      if (complex_pres.empty() == complex_load.empty())
        throw mp::BadParams("complex needs exactly one of <presentation> or --load");
      return cmd_complex(complex_pres, complex_load, complex_dump, as_json);
    }
    if (simplify_cmd->parsed())
      return cmd_simplify(simplify_pres, no_dup, log_moves, max_passes, as_json);
    if (morse_cmd->parsed()) return cmd_morse(morse_pres, morse_matching, print_q0, trace, dump_matching, as_json);
    if (search_cmd->parsed())
      return cmd_search(search_pres, seed, max_trials, target_text, jobs, exhaustive, out_path,
                        as_json);
    if (replay_cmd->parsed()) return cmd_replay(cert_path, as_json);
    if (torus_cmd->parsed()) return cmd_torus_demo(as_json);
  } catch (const mp::OccurrenceViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mp::SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::UnknownGenerator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::UnknownFamily& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::BadParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::EmptyRelator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::StaleCertificate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
