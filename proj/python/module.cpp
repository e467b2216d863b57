#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morsepres/catalog.hpp"
#include "morsepres/complex.hpp"
#include "morsepres/matching.hpp"
#include "morsepres/morse.hpp"
#include "morsepres/search.hpp"
#include "morsepres/simplify.hpp"
#include "morsepres/torus_demo.hpp"

namespace py = pybind11;
namespace mp = morsepres;

namespace {

using IdPairs = std::vector<std::pair<std::string, std::string>>;

mp::Matching matching_from_pairs(const mp::FacePoset& x, const IdPairs& pairs) {
  mp::Matching m;
  for (const auto& [lo, hi] : pairs) {
    const int a = x.index_of(lo), b = x.index_of(hi);
    if (a < 0 || b < 0) throw mp::StaleCertificate("unknown cell id: " + (a < 0 ? lo : hi));
    m.pairs.emplace_back(a, b);
  }
  m.normalize();
  return m;
}

IdPairs pairs_to_ids(const mp::FacePoset& x, const mp::Matching& m) {
  IdPairs out;
  for (auto [lo, hi] : m.pairs)
    out.emplace_back(x.ids()[static_cast<std::size_t>(lo)], x.ids()[static_cast<std::size_t>(hi)]);
  return out;
}

py::dict stats_dict(const mp::Presentation& p) {
  const auto s = mp::stats(p);
  py::dict d;
  d["generators"] = s.generators;
  d["relators"] = s.relators;
  d["total_length"] = s.total_length;
  d["deficiency"] = s.deficiency;
  d["balanced"] = s.balanced();
  return d;
}

mp::Target target_from(const py::object& target) {
  if (py::isinstance<py::str>(target)) {
    const std::string t = target.cast<std::string>();
    if (t == "empty") return mp::Target::empty();
    if (t.rfind("gens:", 0) == 0) return mp::Target::max_gens(std::stoi(t.substr(5)));
    if (t.rfind("equiv:", 0) == 0) return mp::Target::equivalent(mp::parse_presentation(t.substr(6)));
    throw mp::BadParams("bad target: " + t);
  }
  return mp::Target::equivalent(target.cast<mp::Presentation>());
}

py::dict search_outcome_dict(const mp::SearchOutcome& out) {
  py::dict d;
  py::dict stats;
  stats["trials_run"] = out.stats.trials_run;
  stats["occurrence_violations"] = out.stats.occurrence_violations;
  stats["best_generator_count"] = out.stats.best_generator_count;
  py::dict hist;
  for (const auto& [gens, count] : out.stats.generator_histogram) hist[py::int_(gens)] = count;
  stats["generator_histogram"] = std::move(hist);
  d["stats"] = std::move(stats);
  d["success_trial"] = out.success_trial ? py::object(py::int_(*out.success_trial)) : py::none();
  d["result"] =
      out.final_text ? py::object(py::cast(mp::parse_presentation(*out.final_text))) : py::none();
  d["certificate"] = out.certificate ? py::object(py::str(out.certificate->text())) : py::none();
  return d;
}

mp::SearchConfig search_config(std::uint64_t seed, std::uint64_t max_trials,
                               const py::object& target, int jobs, bool exhaustive) {
  mp::SearchConfig cfg;
  cfg.seed = seed;
  cfg.max_trials = max_trials;
  cfg.target = target_from(target);
  cfg.jobs = jobs;
  cfg.exhaustive = exhaustive;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_morsepres, m) {
  m.doc() = "Discrete-Morse exploration of Q**-equivalence for group presentations";

  py::register_exception<mp::Error>(m, "MorsepresError");

  py::class_<mp::Presentation>(m, "Presentation")
      .def(py::init([](const std::string& text) { return mp::parse_presentation(text); }),
           py::arg("text"))
      .def_property_readonly("generators", [](const mp::Presentation& p) { return p.generators; })
      .def_property_readonly("relators",
                             [](const mp::Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators)
                                 out.push_back(mp::word_text(r, p.generators));
                               return out;
                             })
      .def_property_readonly("origin", [](const mp::Presentation& p) { return p.origin; })
      .def("stats", &stats_dict)
      .def("has_empty_relator", &mp::Presentation::has_empty_relator)
      .def("text", [](const mp::Presentation& p) { return mp::to_text(p); })
      .def("__str__", [](const mp::Presentation& p) { return mp::to_text(p); })
      .def("__repr__",
           [](const mp::Presentation& p) { return "Presentation(\"" + mp::to_text(p) + "\")"; })
      .def("__eq__", [](const mp::Presentation& a, const mp::Presentation& b) { return a == b; });

  m.def("parse_presentation", &mp::parse_presentation, py::arg("text"));
  m.def(
      "catalog",
      [](const std::string& family, const std::vector<long>& params) {
        return mp::catalog(family, params);
      },
      py::arg("family"), py::arg("params") = std::vector<long>{});
  m.def("catalog_families", &mp::catalog_families);

  m.def("invariant_factors", [](const mp::Presentation& p) {
    return mp::smith_normal_form(mp::abelianization_matrix(p));
  });
  m.def("smith_normal_form", &mp::smith_normal_form, py::arg("matrix"));
  m.def("canonical_equivalence", &mp::canonical_equivalence, py::arg("p"), py::arg("q"));

  m.def(
      "complex_info",
      [](const mp::Presentation& p) {
        const mp::Complex2 c = mp::presentation_complex(p);
        py::dict d;
        d["vertices"] = c.vertices().size();
        d["edges"] = c.edges().size();
        d["faces"] = c.faces().size();
        d["cells"] = c.cell_count();
        d["euler_characteristic"] = c.euler_characteristic();
        return d;
      },
      py::arg("presentation"));

  m.def(
      "simplified",
      [](const mp::Presentation& p, bool allow_duplicate_deletion, int max_passes) {
        mp::SimplifyConfig cfg;
        cfg.allow_duplicate_deletion = allow_duplicate_deletion;
        cfg.max_passes = max_passes;
        const mp::SimplifyReport rep = mp::simplified(p, cfg);
        py::dict d;
        d["final"] = rep.final;
        d["trivialized"] = rep.trivialized;
        d["used_duplicate_deletion"] = rep.used_duplicate_deletion;
        d["passes"] = rep.passes;
        return d;
      },
      py::arg("presentation"), py::arg("allow_duplicate_deletion") = true,
      py::arg("max_passes") = 1000);

  m.def(
      "spanning_matching",
      [](const mp::Presentation& p, std::uint64_t seed, std::uint64_t trial) {
        const mp::Complex2 c = mp::presentation_complex(p);
        const mp::FacePoset x(c);
        mp::Rng rng(mp::derive_stream(seed, trial));
        return pairs_to_ids(x, mp::spanning_matching(x, rng));
      },
      py::arg("presentation"), py::arg("seed"), py::arg("trial") = 0);

  m.def(
      "morse_presentation",
      [](const mp::Presentation& p, const IdPairs& matching) {
        const mp::Complex2 c = mp::presentation_complex(p);
        const mp::FacePoset x(c);
        return mp::morse_presentation(c, x, matching_from_pairs(x, matching),
                                      "morse(" + mp::to_text(p) + ")");
      },
      py::arg("presentation"), py::arg("matching"));

  m.def(
      "critical_counts",
      [](const mp::Presentation& p, const IdPairs& matching) {
        const mp::Complex2 c = mp::presentation_complex(p);
        const mp::FacePoset x(c);
        const auto crit = mp::critical_cells(x, matching_from_pairs(x, matching));
        return std::vector<std::size_t>{crit[0].size(), crit[1].size(), crit[2].size()};
      },
      py::arg("presentation"), py::arg("matching"));

  m.def(
      "search",
      [](const std::string& catalog_spec, std::uint64_t seed, std::uint64_t max_trials,
         const py::object& target, int jobs, bool exhaustive) {
        const mp::CatalogSpec spec = mp::parse_catalog_spec(catalog_spec);
        const mp::SearchConfig cfg = search_config(seed, max_trials, target, jobs, exhaustive);
        mp::SearchOutcome out;
        {
          py::gil_scoped_release release;
          out = mp::run_search(spec, cfg);
        }
        return search_outcome_dict(out);
      },
      py::arg("catalog_spec"), py::arg("seed"), py::arg("max_trials"), py::arg("target") = "empty",
      py::arg("jobs") = 1, py::arg("exhaustive") = false);

  m.def(
      "search_presentation",
      [](const mp::Presentation& p, std::uint64_t seed, std::uint64_t max_trials,
         const py::object& target, int jobs, bool exhaustive) {
        const mp::SearchConfig cfg = search_config(seed, max_trials, target, jobs, exhaustive);
        mp::SearchOutcome out;
        {
          py::gil_scoped_release release;
          out = mp::run_search(p, cfg);
        }
        return search_outcome_dict(out);
      },
      py::arg("presentation"), py::arg("seed"), py::arg("max_trials"), py::arg("target") = "empty",
      py::arg("jobs") = 1, py::arg("exhaustive") = false);

  m.def("replay", [](const std::string& certificate_text) {
    const mp::ReplayReport rep = mp::replay_certificate(mp::Certificate::parse(certificate_text));
    py::list checks;
    for (const auto& c : rep.checks) {
      py::dict d;
      d["name"] = c.name;
      d["pass"] = c.pass;
      d["detail"] = c.detail;
      checks.append(std::move(d));
    }
    py::dict d;
    d["ok"] = rep.ok();
    d["checks"] = std::move(checks);
    return d;
  });

  m.def("torus_demo", [] {
    const mp::TorusDemo demo = mp::run_torus_demo();
    py::dict d;
    py::list steps;
    for (const auto& [label, word] : demo.steps) {
      py::dict s;
      s["label"] = label;
      s["word"] = word;
      steps.append(std::move(s));
    }
    d["steps"] = std::move(steps);
    d["final"] = demo.final_word;
    d["critical_edges"] = demo.critical_edges;
    return d;
  });
}
