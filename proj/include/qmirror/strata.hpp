#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace qmirror {

/// Stratum label inside one truncation level: levels 0..l index the
/// locally closed pieces {0}^n x C* x C^(l-n); kPointStratum is the origin.
constexpr long kPointStratum = -1;

/// Closure poset of the valuation stratification on C^(l+1): a total order
///   point < T(l) < ... < T(1) < T(0)
/// with loop rank 1 on every non-point stratum.
struct StratumPoset {
  long level = 0;

  size_t stratum_count() const { return static_cast<size_t>(level) + 2; }

  std::vector<long> strata() const {
    std::vector<long> s{kPointStratum};
    for (long n = level; n >= 0; --n) s.push_back(n);
    return s;
  }

  bool valid_stratum(long s) const { return s == kPointStratum || (0 <= s && s <= level); }

  /// Rank of the fundamental group (0 or 1; the non-point strata retract
  /// onto a circle).
  int loop_rank(long s) const {
    if (!valid_stratum(s)) throw std::invalid_argument("StratumPoset: unknown stratum");
    return s == kPointStratum ? 0 : 1;
  }

  /// a < b iff a lies in the closure of b and a != b.
  bool closure_less(long a, long b) const {
    if (!valid_stratum(a) || !valid_stratum(b)) throw std::invalid_argument("StratumPoset: unknown stratum");
    if (a == b) return false;
    if (a == kPointStratum) return true;
    if (b == kPointStratum) return false;
    return a > b;
  }

  /// Stratum image under the coordinate projection to level-1: labels below
  /// the top survive, the top stratum and the point both land on the point.
  std::optional<long> project_to_previous(long s) const {
    if (level < 1) return std::nullopt;
    if (!valid_stratum(s)) throw std::invalid_argument("StratumPoset: unknown stratum");
    if (s == kPointStratum || s == level) return kPointStratum;
    return s;
  }
};

inline StratumPoset stratification_model(long level) {
  if (level < 0) throw std::invalid_argument("stratification_model: negative level");
  return StratumPoset{level};
}

}  // namespace qmirror
