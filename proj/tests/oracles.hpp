// Independent test oracles. Everything here recomputes expected values by
// routes that do not share code with the library implementations they check.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qmirror/matrix.hpp"
#include "qmirror/smith.hpp"

namespace qmirror::oracle {

// --- deterministic random generators -------------------------------------

inline long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng) {
  long num = rand_range(rng, -3, 3);
  long den = rand_range(rng, 1, 3);
  return Rational(num, den);
}

inline LaurentPoly rand_laurent(std::mt19937_64& rng, long exp_lo = -3, long exp_hi = 3,
                                int max_terms = 2) {
  LaurentPoly p;
  int terms = static_cast<int>(rand_range(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t)
    p += LaurentPoly::monomial(rand_range(rng, exp_lo, exp_hi), rand_rational(rng));
  return p;
}

inline LaurentMatrix rand_matrix(std::mt19937_64& rng, size_t rows, size_t cols,
                                 long exp_lo = -3, long exp_hi = 3) {
  LaurentMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rand_laurent(rng, exp_lo, exp_hi);
  return m;
}

// --- invariant factors via determinantal divisors ------------------------
//
// d_i = Delta_i / Delta_{i-1}, where Delta_i is the gcd of all i x i minors.
// This is the textbook definition, with no elimination involved, so it is
// independent of the Smith implementation under test.

inline void enumerate_subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> pick(k);
  for (size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline LaurentPoly minor_gcd(const LaurentMatrix& m, size_t k) {
  std::vector<std::vector<size_t>> rows, cols;
  enumerate_subsets(m.rows(), k, rows);
  enumerate_subsets(m.cols(), k, cols);
  LaurentPoly g;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      LaurentMatrix sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(r[i], c[j]);
      g = gcd(g, sub.determinant());
      if (g.is_unit()) return g.normalized();
    }
  return g.normalized();
}

inline std::vector<LaurentPoly> oracle_invariant_factors(const LaurentMatrix& m) {
  std::vector<LaurentPoly> diag;
  LaurentPoly prev(1);
  for (size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    LaurentPoly dk = minor_gcd(m, k);
    if (dk.is_zero()) break;  // rank reached
    diag.push_back(dk.divmod(prev).first.normalized());
    prev = dk;
  }
  return diag;
}

}  // namespace qmirror::oracle
