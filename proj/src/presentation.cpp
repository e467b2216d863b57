#include "morsepres/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace morsepres {

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  return -1;
}

bool Presentation::has_empty_relator() const {
  return std::any_of(relators.begin(), relators.end(), [](const Word& w) { return w.empty(); });
}

namespace {
bool valid_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}
}  // namespace

void Presentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!valid_ident(generators[i])) throw Error("bad generator name: '" + generators[i] + "'");
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j]) throw Error("duplicate generator name: " + generators[i]);
  }
  const auto n = static_cast<std::int32_t>(generators.size());
  for (const Word& r : relators)
    for (const Letter& l : r) {
      if (l.gen < 0 || l.gen >= n) throw Error("relator letter references undeclared generator");
      if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    }
}

PresentationStats stats(const Presentation& p) {
  PresentationStats s;
  s.generators = static_cast<int>(p.generators.size());
  s.relators = static_cast<int>(p.relators.size());
  for (const Word& r : p.relators) s.total_length += static_cast<long long>(r.size());
  s.deficiency = s.generators - s.relators;
  return s;
}

// --- parser ------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Presentation run() {
    Presentation p;
    skip_ws();
    expect('<');
    skip_ws();
    if (peek() != '|') {
      p.generators.push_back(ident());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        skip_ws();
        p.generators.push_back(ident());
        skip_ws();
      }
    }
    expect('|');
    pres_ = &p;
    skip_ws();
    if (peek() != '>') {
      p.relators.push_back(Word(word()));
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        p.relators.push_back(Word(word()));
        skip_ws();
      }
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input after '>'", pos_);
    p.validate();
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw SyntaxError("expected identifier", pos_);
    ++pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected integer", pos_);
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw SyntaxError("integer out of range", start);
    }
  }

  std::vector<Letter> word() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    std::vector<Letter> out = term();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      auto t = term();
      out.insert(out.end(), t.begin(), t.end());
      skip_ws();
    }
    return out;
  }

  std::vector<Letter> term() {
    std::vector<Letter> base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    long e = integer();
    std::vector<Letter> out;
    if (e < 0) {
      std::reverse(base.begin(), base.end());
      for (Letter& l : base) l = l.inverse();
      e = -e;
    }
    for (long r = 0; r < e; ++r) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  std::vector<Letter> atom() {
    skip_ws();
    if (peek() == '[') {
      ++pos_;
      std::vector<Letter> u = word();
      skip_ws();
      expect(',');
      std::vector<Letter> v = word();
      skip_ws();
      expect(']');
      // [u, v] = u v u^-1 v^-1
      std::vector<Letter> out = u;
      out.insert(out.end(), v.begin(), v.end());
      for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
      for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
      return out;
    }
    const std::size_t at = pos_;
    std::string name = ident();
    const int g = pres_->generator_index(name);
    if (g < 0) throw UnknownGenerator("unknown generator '" + name + "' at offset " + std::to_string(at));
    return {Letter(g, +1)};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  const Presentation* pres_ = nullptr;
};

}  // namespace

Presentation parse_presentation(const std::string& text) { return Parser(text).run(); }

std::string word_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!first) os << '*';
    first = false;
    os << names.at(static_cast<std::size_t>(w[i].gen));
    const long e = w[i].sign * run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ',';
    os << p.generators[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) os << ", ";
    os << word_text(p.relators[i], p.generators);
  }
  os << '>';
  return os.str();
}

// --- moves -------------------------------------------------------------------

bool preserves_deficiency_class(MoveKind k) {
  return k != MoveKind::AddTrivialRelator && k != MoveKind::RemoveTrivialRelator;
}

namespace {
void check_index(const Presentation& p, int i) {
  if (i < 0 || i >= static_cast<int>(p.relators.size())) throw Error("relator index out of range");
}
}  // namespace

Presentation apply_move(Presentation p, const Move& m) {
  switch (m.kind) {
    case MoveKind::InvertRelator:
      check_index(p, m.i);
      p.relators[static_cast<std::size_t>(m.i)] = invert(p.relators[static_cast<std::size_t>(m.i)]);
      break;
    case MoveKind::MultiplyRelator: {
      check_index(p, m.i);
      check_index(p, m.j);
      if (m.i == m.j) throw Error("MultiplyRelator requires distinct relators");
      auto& r = p.relators[static_cast<std::size_t>(m.i)];
      r = concat(r, p.relators[static_cast<std::size_t>(m.j)]);
      break;
    }
    case MoveKind::ConjugateRelator:
      check_index(p, m.i);
      p.relators[static_cast<std::size_t>(m.i)] =
          conjugate(p.relators[static_cast<std::size_t>(m.i)], m.w);
      break;
    case MoveKind::RotateRelator:
      check_index(p, m.i);
      p.relators[static_cast<std::size_t>(m.i)] =
          p.relators[static_cast<std::size_t>(m.i)].rotated(static_cast<std::size_t>(m.k));
      break;
    case MoveKind::AddGeneratorAndRelator: {
      if (p.generator_index(m.name) >= 0) throw Error("generator name already in use: " + m.name);
      const auto g = static_cast<std::int32_t>(p.generators.size());
      p.generators.push_back(m.name);
      p.relators.push_back(Word::single(g));
      break;
    }
    case MoveKind::RemoveGeneratorAndRelator: {
      check_index(p, m.i);
      if (m.gen < 0 || m.gen >= static_cast<int>(p.generators.size()))
        throw Error("generator index out of range");
      if (occurrences(p.relators[static_cast<std::size_t>(m.i)], m.gen) != 1)
        throw Error("RemoveGeneratorAndRelator: relator must contain the generator exactly once");
      for (int j = 0; j < static_cast<int>(p.relators.size()); ++j)
        if (j != m.i && occurrences(p.relators[static_cast<std::size_t>(j)], m.gen) != 0)
          throw Error("RemoveGeneratorAndRelator: generator still occurs in another relator");
      p.relators.erase(p.relators.begin() + m.i);
      p.generators.erase(p.generators.begin() + m.gen);
      for (Word& r : p.relators) {
        std::vector<Letter> raw = r.letters();
        for (Letter& l : raw)
          if (l.gen > m.gen) --l.gen;
        r = Word(std::move(raw));
      }
      break;
    }
    case MoveKind::AddTrivialRelator:
      p.relators.emplace_back();
      break;
    case MoveKind::RemoveTrivialRelator:
      check_index(p, m.i);
      if (!p.relators[static_cast<std::size_t>(m.i)].empty())
        throw Error("RemoveTrivialRelator: relator is not empty");
      p.relators.erase(p.relators.begin() + m.i);
      break;
  }
  return p;
}

Presentation replay_moves(Presentation p, const MoveLog& log) {
  for (const Move& m : log) p = apply_move(std::move(p), m);
  return p;
}

std::string move_text(const Move& m, const Presentation& before) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::InvertRelator: os << "invert r" << m.i; break;
    case MoveKind::MultiplyRelator: os << "multiply r" << m.i << " r" << m.j; break;
    case MoveKind::ConjugateRelator:
      os << "conjugate r" << m.i << " by " << word_text(m.w, before.generators);
      break;
    case MoveKind::RotateRelator: os << "rotate r" << m.i << " by " << m.k; break;
    case MoveKind::AddGeneratorAndRelator: os << "add-generator " << m.name; break;
    case MoveKind::RemoveGeneratorAndRelator:
      os << "remove-generator " << before.generators.at(static_cast<std::size_t>(m.gen)) << " r" << m.i;
      break;
    case MoveKind::AddTrivialRelator: os << "add-trivial"; break;
    case MoveKind::RemoveTrivialRelator: os << "remove-trivial r" << m.i; break;
  }
  return os.str();
}

// --- generator elimination ---------------------------------------------------

Presentation eliminate_generator_direct(const Presentation& p, int gen, int rel) {
  const Word expr = equivalent_expression(p.relators.at(static_cast<std::size_t>(rel)), gen);
  Presentation out;
  out.origin = p.origin;
  for (int g = 0; g < static_cast<int>(p.generators.size()); ++g)
    if (g != gen) out.generators.push_back(p.generators[static_cast<std::size_t>(g)]);
  for (int j = 0; j < static_cast<int>(p.relators.size()); ++j) {
    if (j == rel) continue;
    Word w = substitute(p.relators[static_cast<std::size_t>(j)], gen, expr);
    std::vector<Letter> raw = w.letters();
    for (Letter& l : raw)
      if (l.gen > gen) --l.gen;
    out.relators.push_back(Word(std::move(raw)));
  }
  return out;
}

std::pair<Presentation, MoveLog> eliminate_generator(const Presentation& p, int gen, int rel) {
  check_index(p, rel);
  if (gen < 0 || gen >= static_cast<int>(p.generators.size()))
    throw Error("generator index out of range");
  if (occurrences(p.relators[static_cast<std::size_t>(rel)], gen) != 1)
    throw GeneratorNotUnique("eliminate_generator requires a unique occurrence in the chosen relator");

  MoveLog log;
  Presentation cur = p;
  auto emit = [&](Move m) {
    cur = apply_move(std::move(cur), m);
    log.push_back(std::move(m));
  };
  // bring the pivot relator to the word g^-eps * E^eps by inversion/rotation
  auto shape_pivot = [&](std::int32_t eps) {
    const Word E = equivalent_expression(cur.relators[static_cast<std::size_t>(rel)], gen);
    const Word target = concat(Word::single(gen, -eps), eps > 0 ? E : invert(E));
    for (int inv = 0; inv < 2; ++inv) {
      const Word& r = cur.relators[static_cast<std::size_t>(rel)];
      for (std::size_t k = 0; k < std::max<std::size_t>(1, r.size()); ++k) {
        if (r.rotated(k) == target) {
          if (k > 0) emit({.kind = MoveKind::RotateRelator, .i = rel, .k = static_cast<int>(k)});
          return;
        }
      }
      emit({.kind = MoveKind::InvertRelator, .i = rel});
    }
    throw Error("internal: pivot relator cannot be shaped for elimination");
  };

  for (int j = 0; j < static_cast<int>(cur.relators.size()); ++j) {
    if (j == rel) continue;
    while (occurrences(cur.relators[static_cast<std::size_t>(j)], gen) > 0) {
      const Word& rj = cur.relators[static_cast<std::size_t>(j)];
      std::size_t pos = 0;
      while (rj[pos].gen != gen) ++pos;
      const std::int32_t eps = rj[pos].sign;
      const Word suffix(std::vector<Letter>(rj.letters().begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                                            rj.letters().end()));
      shape_pivot(eps);
      // r_j -> b (a g^eps) -> b a E^eps -> a E^eps b: in-place substitution
      if (!suffix.empty()) emit({.kind = MoveKind::ConjugateRelator, .i = j, .w = suffix});
      emit({.kind = MoveKind::MultiplyRelator, .i = j, .j = rel});
      if (!suffix.empty()) emit({.kind = MoveKind::ConjugateRelator, .i = j, .w = invert(suffix)});
    }
  }
  emit({.kind = MoveKind::RemoveGeneratorAndRelator, .i = rel, .gen = gen});
  return {std::move(cur), std::move(log)};
}

// --- canonical equivalence ---------------------------------------------------

namespace {
std::vector<std::vector<Letter>> canonical_relator_set(const Presentation& p) {
  std::vector<std::vector<Letter>> out;
  out.reserve(p.relators.size());
  for (const Word& r : p.relators) out.push_back(cyclic_canonical(r));
  auto less = [](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    auto key = [](const Letter& l) { return std::pair(l.gen, l.sign < 0); };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](const Letter& x, const Letter& y) { return key(x) < key(y); });
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return less(a, b);
  });
  return out;
}
}  // namespace

bool canonical_equivalence(const Presentation& p, const Presentation& q) {
  if (p.generators.size() > 4 || q.generators.size() > 4)
    throw TooLarge("canonical_equivalence is limited to four generators");
  if (p.generators.size() != q.generators.size() || p.relators.size() != q.relators.size())
    return false;
  const auto n = static_cast<int>(p.generators.size());
  const auto target = canonical_relator_set(q);

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    for (int signbits = 0; signbits < (1 << n); ++signbits) {
      Presentation mapped;
      mapped.generators = q.generators;
      bool ok = true;
      for (const Word& r : p.relators) {
        std::vector<Letter> raw;
        raw.reserve(r.size());
        for (const Letter& l : r) {
          const int g = perm[static_cast<std::size_t>(l.gen)];
          const std::int32_t s = (signbits >> l.gen) & 1 ? -l.sign : l.sign;
          raw.emplace_back(g, s);
        }
        mapped.relators.push_back(Word(std::move(raw)));
        if (mapped.relators.back().size() != r.size()) {
          ok = false;  // renaming never changes length; guard anyway
          break;
        }
      }
      if (ok && canonical_relator_set(mapped) == target) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace morsepres
