#include "morsepres/simplify.hpp"

#include <algorithm>
#include <optional>

namespace morsepres {

namespace {

struct Ctx {
  Presentation p;
  MoveLog* log = nullptr;
  bool used_duplicate_deletion = false;

  void emit(Move m) {
    p = apply_move(std::move(p), m);
    if (log) log->push_back(std::move(m));
  }

  // rotate/invert relator i until it equals target (which must be reachable)
  void shape_relator(int i, const Word& target) {
    for (int inv = 0; inv < 2; ++inv) {
      const Word& r = p.relators[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < std::max<std::size_t>(1, r.size()); ++k) {
        if (r.rotated(k) == target) {
          if (k > 0) emit({.kind = MoveKind::RotateRelator, .i = i, .k = static_cast<int>(k)});
          return;
        }
      }
      emit({.kind = MoveKind::InvertRelator, .i = i});
    }
    throw Error("internal: relator cannot be shaped to the requested word");
  }
};

// longest common suffix of two letter sequences
std::size_t common_suffix(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
  return n;
}

std::vector<Letter> raw_rotation(const std::vector<Letter>& v, std::size_t k) {
  std::vector<Letter> out(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

bool cyclic_reduce_all(Ctx& ctx) {
  bool changed = false;
  for (int i = 0; i < static_cast<int>(ctx.p.relators.size()); ++i) {
    const Word& r = ctx.p.relators[static_cast<std::size_t>(i)];
    const Word core = cyclic_reduce(r);
    if (core == r) continue;
    // r = d * core * d^-1; conjugating by d^-1 is the reducing move
    const std::size_t strip = (r.size() - core.size()) / 2;
    const Word d(std::vector<Letter>(r.letters().begin(),
                                     r.letters().begin() + static_cast<std::ptrdiff_t>(strip)));
    ctx.emit({.kind = MoveKind::ConjugateRelator, .i = i, .w = invert(d)});
    changed = true;
  }
  return changed;
}

// empty-relator deletion and the duplicate-relator rule; both are the (6) move
bool cleanup(Ctx& ctx, bool allow_duplicate_deletion) {
  if (!allow_duplicate_deletion) return false;
  bool changed = false;
  for (int i = 0; i < static_cast<int>(ctx.p.relators.size());) {
    if (ctx.p.relators[static_cast<std::size_t>(i)].empty()) {
      ctx.emit({.kind = MoveKind::RemoveTrivialRelator, .i = i});
      ctx.used_duplicate_deletion = true;
      changed = true;
    } else {
      ++i;
    }
  }
  for (int i = 0; i < static_cast<int>(ctx.p.relators.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(ctx.p.relators.size());) {
      const Word ri = ctx.p.relators[static_cast<std::size_t>(i)];
      const Word& rj = ctx.p.relators[static_cast<std::size_t>(j)];
      if (!ri.empty() && cyclic_canonical(ri) == cyclic_canonical(rj)) {
        // align r_j with r_i, multiply by the inverse, drop the resulting 1
        ctx.shape_relator(j, ri);
        ctx.emit({.kind = MoveKind::InvertRelator, .i = j});
        ctx.emit({.kind = MoveKind::MultiplyRelator, .i = j, .j = i});
        ctx.emit({.kind = MoveKind::RemoveTrivialRelator, .i = j});
        ctx.used_duplicate_deletion = true;
        changed = true;
      } else {
        ++j;
      }
    }
  }
  return changed;
}

struct ReplacementPlan {
  std::size_t vlen = 0;
  int i1 = -1;
  std::size_t k1 = 0;
  int i2 = -1;
  std::size_t k2 = 0;
  int inv = 0;
};

std::optional<ReplacementPlan> find_replacement(const Presentation& p) {
  std::optional<ReplacementPlan> best;
  auto better = [&](const ReplacementPlan& c) {
    if (!best) return true;
    if (c.vlen != best->vlen) return c.vlen > best->vlen;
    return std::tie(c.i1, c.k1, c.i2, c.k2, c.inv) <
           std::tie(best->i1, best->k1, best->i2, best->k2, best->inv);
  };
  for (int i1 = 0; i1 < static_cast<int>(p.relators.size()); ++i1) {
    const auto& r1 = p.relators[static_cast<std::size_t>(i1)].letters();
    if (r1.empty()) continue;
    for (std::size_t k1 = 0; k1 < r1.size(); ++k1) {
      const auto rot1 = raw_rotation(r1, k1);
      for (int i2 = 0; i2 < static_cast<int>(p.relators.size()); ++i2) {
        if (i2 == i1) continue;
        const Word& r2w = p.relators[static_cast<std::size_t>(i2)];
        if (r2w.empty()) continue;
        for (int inv = 0; inv < 2; ++inv) {
          const auto base2 = inv ? invert(r2w).letters() : r2w.letters();
          for (std::size_t k2 = 0; k2 < base2.size(); ++k2) {
            const auto rot2 = raw_rotation(base2, k2);
            const std::size_t v = common_suffix(rot1, rot2);
            // |u| < |v| : v must cover more than half of r1
            if (2 * v <= r1.size()) continue;
            ReplacementPlan c{v, i1, k1, i2, k2, inv};
            if (better(c)) best = c;
          }
        }
      }
    }
  }
  return best;
}

void apply_replacement(Ctx& ctx, const ReplacementPlan& plan) {
  const Word r1_orig = ctx.p.relators[static_cast<std::size_t>(plan.i1)];
  const auto rot1 = raw_rotation(r1_orig.letters(), plan.k1);
  // bring r2 to the aligned rotation w * v
  Word base2 = plan.inv ? invert(ctx.p.relators[static_cast<std::size_t>(plan.i2)])
                        : ctx.p.relators[static_cast<std::size_t>(plan.i2)];
  ctx.shape_relator(plan.i2, Word(raw_rotation(base2.letters(), plan.k2)));
  // bring r1 to (u v)^-1 = v^-1 u^-1, multiply, then restore r1
  ctx.shape_relator(plan.i1, invert(Word(rot1)));
  ctx.emit({.kind = MoveKind::MultiplyRelator, .i = plan.i2, .j = plan.i1});
  ctx.shape_relator(plan.i1, r1_orig);
  // cyclically reduce the replacement
  const Word& r2 = ctx.p.relators[static_cast<std::size_t>(plan.i2)];
  const Word core = cyclic_reduce(r2);
  if (core != r2) {
    const std::size_t strip = (r2.size() - core.size()) / 2;
    const Word d(std::vector<Letter>(r2.letters().begin(),
                                     r2.letters().begin() + static_cast<std::ptrdiff_t>(strip)));
    ctx.emit({.kind = MoveKind::ConjugateRelator, .i = plan.i2, .w = invert(d)});
  }
}

bool search_phase_impl(Ctx& ctx) {
  bool changed = cyclic_reduce_all(ctx);
  while (auto plan = find_replacement(ctx.p)) {
    const long long before = stats(ctx.p).total_length;
    apply_replacement(ctx, *plan);
    const long long after = stats(ctx.p).total_length;
    if (after >= before) throw Error("internal: search phase failed to reduce length");
    changed = true;
  }
  return changed;
}

std::optional<std::pair<int, int>> first_eliminable(const Presentation& p) {
  for (int g = 0; g < static_cast<int>(p.generators.size()); ++g)
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
      if (occurrences(p.relators[static_cast<std::size_t>(i)], g) == 1) return std::pair(g, i);
  return std::nullopt;
}

bool elimination_phase_impl(Ctx& ctx) {
  bool changed = false;
  while (auto pick = first_eliminable(ctx.p)) {
    const auto [g, i] = *pick;
    if (ctx.log) {
      auto [next, log] = eliminate_generator(ctx.p, g, i);
      ctx.log->insert(ctx.log->end(), log.begin(), log.end());
      ctx.p = std::move(next);
    } else {
      ctx.p = eliminate_generator_direct(ctx.p, g, i);
    }
    changed = true;
  }
  return changed;
}

}  // namespace

std::pair<Presentation, bool> search_phase(const Presentation& p) {
  Ctx ctx{p, nullptr, false};
  const bool changed = search_phase_impl(ctx);
  return {std::move(ctx.p), changed};
}

std::pair<Presentation, bool> elimination_phase(const Presentation& p) {
  Ctx ctx{p, nullptr, false};
  const bool changed = elimination_phase_impl(ctx);
  return {std::move(ctx.p), changed};
}

SimplifyReport simplified(const Presentation& p, const SimplifyConfig& cfg) {
  SimplifyReport report;
  Ctx ctx{p, nullptr, false};
  if (cfg.log_moves) ctx.log = &report.moves;
  for (int pass = 0; pass < cfg.max_passes; ++pass) {
    bool changed = cleanup(ctx, cfg.allow_duplicate_deletion);
    changed |= search_phase_impl(ctx);
    changed |= cleanup(ctx, cfg.allow_duplicate_deletion);
    changed |= elimination_phase_impl(ctx);
    ++report.passes;
    if (!changed) break;
  }
  report.used_duplicate_deletion = ctx.used_duplicate_deletion;
  report.final = std::move(ctx.p);
  report.trivialized = report.final.generators.empty() && report.final.relators.empty();
  return report;
}

}  // namespace morsepres
