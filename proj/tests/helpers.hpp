#pragma once

#include <string>
#include <vector>

#include "morsepres/presentation.hpp"
#include "morsepres/rng.hpp"

namespace testutil {

inline morsepres::Presentation pres(const std::string& text) {
  return morsepres::parse_presentation(text);
}

// relator i of an inline presentation; compact word literals for tests
inline morsepres::Word rel(const std::string& text, std::size_t i = 0) {
  return pres(text).relators.at(i);
}

// random freely reduced word over generators [0, gens)
inline morsepres::Word random_word(morsepres::Rng& rng, int gens, std::size_t max_len) {
  std::vector<morsepres::Letter> raw;
  const std::size_t len = rng.below(max_len + 1);
  while (raw.size() < len) {
    morsepres::Letter l(static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(gens))),
                        rng.below(2) ? 1 : -1);
    if (!raw.empty() && raw.back() == l.inverse()) continue;
    raw.push_back(l);
  }
  return morsepres::Word(std::move(raw));
}

// random reduced word avoiding generator g
inline morsepres::Word random_word_avoiding(morsepres::Rng& rng, int gens, int g,
                                            std::size_t max_len) {
  std::vector<morsepres::Letter> raw;
  const std::size_t len = rng.below(max_len + 1);
  while (raw.size() < len) {
    auto pick = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(gens)));
    if (pick == g) continue;
    morsepres::Letter l(pick, rng.below(2) ? 1 : -1);
    if (!raw.empty() && raw.back() == l.inverse()) continue;
    raw.push_back(l);
  }
  return morsepres::Word(std::move(raw));
}

}  // namespace testutil
