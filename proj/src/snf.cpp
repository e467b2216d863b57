#include <algorithm>
#include <cstdlib>
#include <limits>

#include "morsepres/presentation.hpp"

namespace morsepres {

IntMatrix abelianization_matrix(const Presentation& p) {
  const std::size_t m = p.relators.size();
  const std::size_t n = p.generators.size();
  IntMatrix a(m, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (const Letter& l : p.relators[i]) a[i][static_cast<std::size_t>(l.gen)] += l.sign;
  return a;
}

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith normal form");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in Smith normal form");
  return r;
}

long long checked_abs(long long a) {
  if (a == std::numeric_limits<long long>::min())
    throw OverflowError("integer overflow in Smith normal form");
  return a < 0 ? -a : a;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (std::size_t c = 0; c < m[dst].size(); ++c)
    m[dst][c] = checked_add(m[dst][c], checked_mul(q, m[src][c]));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  for (std::size_t r = 0; r < m.size(); ++r)
    m[r][dst] = checked_add(m[r][dst], checked_mul(q, m[r][src]));
}

}  // namespace

std::vector<long long> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t rank_bound = std::min(rows, cols);
  std::vector<long long> diag;

  std::size_t t = 0;
  while (t < rank_bound) {
    // pivot: smallest nonzero magnitude in the trailing submatrix
    std::size_t pr = t, pc = t;
    long long best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || checked_abs(m[r][c]) < best)) {
          best = checked_abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const long long q = m[r][t] / m[t][t];
        add_row_multiple(m, r, t, -q);
        if (m[r][t] != 0) {  // remainder becomes the smaller pivot
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const long long q = m[t][c] / m[t][t];
        add_col_multiple(m, c, t, -q);
        if (m[t][c] != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide the rest of the submatrix
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols && clean; ++c)
          if (m[r][c] % m[t][t] != 0) {
            add_row_multiple(m, t, r, 1);
            clean = false;
          }
    }
    diag.push_back(checked_abs(m[t][t]));
    ++t;
  }
  diag.resize(rank_bound, 0);
  return diag;
}

std::vector<long long> nonunit_factors(std::vector<long long> factors) {
  factors.erase(std::remove(factors.begin(), factors.end(), 1LL), factors.end());
  return factors;
}

}  // namespace morsepres
