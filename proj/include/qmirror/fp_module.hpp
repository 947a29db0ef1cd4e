#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qmirror/smith.hpp"

namespace qmirror {

/// Isomorphism-complete invariant of a finitely presented module over
/// Q[y, y^-1]: free rank plus the divisibility chain of invariant factors
/// (non-unit, nonzero, normalized).
struct NormalForm {
  size_t free_rank = 0;
  std::vector<LaurentPoly> invariant_factors;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }

  /// Dimension over Q; nullopt when the free part makes it infinite.
  std::optional<long> qdim() const {
    if (free_rank > 0) return std::nullopt;
    long d = 0;
    for (const auto& f : invariant_factors) d += f.spread();
    return d;
  }

  std::string str() const {
    std::string s = "(free " + std::to_string(free_rank) + "; [";
    for (size_t i = 0; i < invariant_factors.size(); ++i)
      s += (i ? ", " : "") + invariant_factors[i].str();
    return s + "])";
  }
};

/// Finitely presented module over Q[y, y^-1], given by a generator count
/// and a relation matrix whose columns are the relations.
class FPModule {
public:
  FPModule() : FPModule(0, LaurentMatrix(0, 0)) {}
  FPModule(size_t gens, LaurentMatrix relations)
      : gens_(gens), relations_(std::move(relations)), cache_(std::make_shared<Cache>()) {
    if (relations_.rows() != gens_)
      throw std::invalid_argument("FPModule: relation matrix must have one row per generator");
  }

  static FPModule zero() { return FPModule(); }
  static FPModule free(size_t n) { return FPModule(n, LaurentMatrix(n, 0)); }
  static FPModule cyclic(const LaurentPoly& rel) {
    LaurentMatrix m(1, 1);
    m.at(0, 0) = rel;
    return FPModule(1, m);
  }
  /// Q[y,y^-1]/(y-1): the one-dimensional module with trivial monodromy.
  static FPModule trivial_monodromy_line() { return cyclic(LaurentPoly::y_minus_one()); }

  size_t gens() const { return gens_; }
  const LaurentMatrix& relations() const { return relations_; }

  const NormalForm& normal_form() const {
    std::call_once(cache_->flag, [this] {
      auto sm = snf(relations_);
      NormalForm nf;
      nf.free_rank = gens_ - sm.rank;
      for (size_t i = 0; i < sm.rank; ++i)
        if (!sm.S.at(i, i).is_unit()) nf.invariant_factors.push_back(sm.S.at(i, i));
      cache_->nf = std::move(nf);
    });
    return cache_->nf;
  }

  bool is_zero_module() const { return normal_form().is_zero(); }
  std::optional<long> qdim() const { return normal_form().qdim(); }

  /// Literal presentation equality (stronger than isomorphism).
  friend bool operator==(const FPModule& a, const FPModule& b) {
    return a.gens_ == b.gens_ && a.relations_ == b.relations_;
  }
  friend bool operator!=(const FPModule& a, const FPModule& b) { return !(a == b); }

  bool isomorphic_to(const FPModule& o) const { return normal_form() == o.normal_form(); }

  friend FPModule direct_sum(const FPModule& a, const FPModule& b) {
    return FPModule(a.gens_ + b.gens_, block_diag(a.relations_, b.relations_));
  }

  std::string str() const {
    return "FPModule(gens=" + std::to_string(gens_) + ", rels=" + relations_.str() + ")";
  }

private:
  struct Cache {
    std::once_flag flag;
    NormalForm nf;
  };
  size_t gens_;
  LaurentMatrix relations_;
  std::shared_ptr<Cache> cache_;
};

/// module_normal_form as a free function, matching the operation name.
inline NormalForm module_normal_form(const FPModule& m) { return m.normal_form(); }

}  // namespace qmirror
