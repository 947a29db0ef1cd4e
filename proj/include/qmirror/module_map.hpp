#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "qmirror/fp_module.hpp"

namespace qmirror {

class ModuleMap;

struct KernelResult {
  FPModule module;
  LaurentMatrix inclusion;  // source_gens x kernel_gens, columns = generators
};

struct MapOps {
  FPModule kernel;
  FPModule cokernel;
  bool is_iso = false;
};

/// Map of finitely presented modules, given on generators. Carries a
/// well-definedness certificate: each relation of the source must map
/// into the relation submodule of the target (checked at construction).
class ModuleMap {
public:
  ModuleMap(FPModule source, FPModule target, LaurentMatrix mat)
      : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
    if (mat_.rows() != target_.gens() || mat_.cols() != source_.gens())
      throw std::invalid_argument("ModuleMap: matrix shape mismatch");
    well_defined_ = solve_linear(target_.relations(), mat_ * source_.relations()).has_value();
  }

  static ModuleMap identity(const FPModule& m) {
    return ModuleMap(m, m, LaurentMatrix::identity(m.gens()));
  }
  static ModuleMap zero(const FPModule& src, const FPModule& tgt) {
    return ModuleMap(src, tgt, LaurentMatrix(tgt.gens(), src.gens()));
  }
  /// Multiplication by a ring element, as an endomorphism.
  static ModuleMap multiplication(const FPModule& m, const LaurentPoly& s) {
    return ModuleMap(m, m, LaurentMatrix::identity(m.gens()).scaled(s));
  }

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const LaurentMatrix& matrix() const { return mat_; }
  bool is_well_defined() const { return well_defined_; }

  void require_well_defined() const {
    if (!well_defined_) throw std::invalid_argument("ModuleMap: ill-defined map (certificate failed)");
  }

  /// True iff the map is zero, i.e. every generator image lies in the
  /// relation submodule of the target.
  bool is_zero_map() const {
    return solve_linear(target_.relations(), mat_).has_value();
  }

  friend ModuleMap compose(const ModuleMap& after, const ModuleMap& before) {
    if (!(before.target_ == after.source_))
      throw std::invalid_argument("ModuleMap: compose endpoint mismatch");
    return ModuleMap(before.source_, after.target_, after.mat_ * before.mat_);
  }

  friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
    if (!(a.source_ == b.source_ && a.target_ == b.target_))
      throw std::invalid_argument("ModuleMap: sum endpoint mismatch");
    return ModuleMap(a.source_, a.target_, a.mat_ + b.mat_);
  }
  friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
    if (!(a.source_ == b.source_ && a.target_ == b.target_))
      throw std::invalid_argument("ModuleMap: difference endpoint mismatch");
    return ModuleMap(a.source_, a.target_, a.mat_ - b.mat_);
  }

  ModuleMap scaled(const LaurentPoly& s) const { return ModuleMap(source_, target_, mat_.scaled(s)); }

  /// Equality as maps (difference is the zero map).
  friend bool equal_as_maps(const ModuleMap& a, const ModuleMap& b) { return (a - b).is_zero_map(); }

  /// Kernel with an explicit inclusion into the source. Generators are the
  /// projections of a syzygy basis of [matrix | target relations]; their own
  /// relations are the syzygies of [generators | source relations].
  KernelResult kernel() const {
    require_well_defined();
    LaurentMatrix t1 = hconcat(mat_, target_.relations());
    LaurentMatrix full = kernel_basis(t1);
    LaurentMatrix gens = full.top_rows(source_.gens());
    LaurentMatrix t2 = hconcat(gens, source_.relations());
    LaurentMatrix rels = kernel_basis(t2).top_rows(gens.cols());
    return KernelResult{FPModule(gens.cols(), rels), gens};
  }

  FPModule cokernel() const {
    require_well_defined();
    return FPModule(target_.gens(), hconcat(target_.relations(), mat_));
  }

  friend MapOps map_ops(const ModuleMap& f) {
    f.require_well_defined();
    MapOps r{f.kernel().module, f.cokernel(), false};
    r.is_iso = r.kernel.is_zero_module() && r.cokernel.is_zero_module();
    return r;
  }

  friend ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b) {
    return ModuleMap(direct_sum(a.source_, b.source_), direct_sum(a.target_, b.target_),
                     block_diag(a.mat_, b.mat_));
  }

private:
  FPModule source_, target_;
  LaurentMatrix mat_;
  bool well_defined_ = false;
};

/// Factors f through the kernel of another map: given ker(g) with inclusion
/// k: K -> B and f: A -> B landing in the kernel, returns the unique-up-to-
/// relations lift A -> K.
inline ModuleMap lift_through_kernel(const KernelResult& ker, const ModuleMap& f) {
  auto sol = solve_linear(hconcat(ker.inclusion, f.target().relations()), f.matrix());
  if (!sol) throw std::logic_error("lift_through_kernel: image does not land in the kernel");
  return ModuleMap(f.source(), ker.module, sol->top_rows(ker.module.gens()));
}

/// Homology ker(g)/im(f) of a two-step composable pair with g o f = 0.
inline FPModule homology_at(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.target() == g.source())) throw std::invalid_argument("homology_at: endpoint mismatch");
  if (!compose(g, f).is_zero_map())
    throw std::invalid_argument("homology_at: maps do not compose to zero");
  KernelResult ker = g.kernel();
  ModuleMap lift = lift_through_kernel(ker, f);
  return lift.cokernel();
}

}  // namespace qmirror
