#pragma once

#include <vector>

#include "qmirror/module_map.hpp"

namespace qmirror {

/// Bounded complex of free modules with differentials composing to zero.
struct FreeComplex {
  std::vector<size_t> ranks;
  std::vector<LaurentMatrix> diffs;  // diffs[i]: position i -> i+1

  void validate() const {
    if (!ranks.empty() && diffs.size() + 1 != ranks.size())
      throw std::invalid_argument("FreeComplex: need one differential per adjacent pair");
    for (size_t i = 0; i < diffs.size(); ++i)
      if (diffs[i].rows() != ranks[i + 1] || diffs[i].cols() != ranks[i])
        throw std::invalid_argument("FreeComplex: differential shape mismatch");
    for (size_t i = 0; i + 1 < diffs.size(); ++i)
      if (!(diffs[i + 1] * diffs[i]).is_zero())
        throw std::invalid_argument("FreeComplex: differentials do not compose to zero");
  }
};

/// Bounded complex of finitely presented modules.
class ModuleComplex {
public:
  ModuleComplex(std::vector<FPModule> terms, std::vector<ModuleMap> maps)
      : terms_(std::move(terms)), maps_(std::move(maps)) {
    if (terms_.empty()) throw std::invalid_argument("ModuleComplex: empty");
    if (maps_.size() + 1 != terms_.size())
      throw std::invalid_argument("ModuleComplex: need one map per adjacent pair");
    for (size_t i = 0; i < maps_.size(); ++i) {
      if (!(maps_[i].source() == terms_[i]) || !(maps_[i].target() == terms_[i + 1]))
        throw std::invalid_argument("ModuleComplex: map endpoints mismatch");
      maps_[i].require_well_defined();
    }
    for (size_t i = 0; i + 1 < maps_.size(); ++i)
      if (!compose(maps_[i + 1], maps_[i]).is_zero_map())
        throw std::invalid_argument("ModuleComplex: maps do not compose to zero");
  }

  const std::vector<FPModule>& terms() const { return terms_; }
  const std::vector<ModuleMap>& maps() const { return maps_; }

  /// Cohomology at every position. Ends are treated as extended by zero.
  std::vector<FPModule> cohomology() const {
    std::vector<FPModule> h;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const bool has_in = i > 0;
      const bool has_out = i + 1 < terms_.size();
      if (!has_in && !has_out) {
        h.push_back(terms_[i]);
      } else if (!has_in) {
        h.push_back(maps_[i].kernel().module);
      } else if (!has_out) {
        h.push_back(maps_[i - 1].cokernel());
      } else {
        h.push_back(homology_at(maps_[i - 1], maps_[i]));
      }
    }
    return h;
  }

private:
  std::vector<FPModule> terms_;
  std::vector<ModuleMap> maps_;
};

inline ModuleComplex to_module_complex(const FreeComplex& c) {
  c.validate();
  std::vector<FPModule> terms;
  for (size_t r : c.ranks) terms.push_back(FPModule::free(r));
  std::vector<ModuleMap> maps;
  for (size_t i = 0; i < c.diffs.size(); ++i)
    maps.emplace_back(terms[i], terms[i + 1], c.diffs[i]);
  return ModuleComplex(std::move(terms), std::move(maps));
}

/// Cohomology of a bounded free complex, one module per position.
inline std::vector<FPModule> complex_cohomology(const FreeComplex& c) {
  return to_module_complex(c).cohomology();
}

/// Maps induced on cohomology by a chain map (componentwise maps commuting
/// with the differentials). Mirrors the position conventions of
/// ModuleComplex::cohomology().
inline std::vector<ModuleMap> induced_on_cohomology(const ModuleComplex& a,
                                                    const ModuleComplex& b,
                                                    const std::vector<ModuleMap>& components) {
  if (components.size() != a.terms().size() || a.terms().size() != b.terms().size())
    throw std::invalid_argument("induced_on_cohomology: size mismatch");
  for (size_t i = 0; i + 1 < components.size(); ++i) {
    ModuleMap lhs = compose(components[i + 1], a.maps()[i]);
    ModuleMap rhs = compose(b.maps()[i], components[i]);
    if (!equal_as_maps(lhs, rhs))
      throw std::invalid_argument("induced_on_cohomology: components do not commute");
  }
  std::vector<ModuleMap> out;
  for (size_t i = 0; i < components.size(); ++i) {
    const bool has_in = i > 0;
    const bool has_out = i + 1 < components.size();
    if (!has_in && !has_out) {
      out.push_back(components[i]);
    } else if (!has_in) {
      // kernel -> kernel: lift the restricted component through the target kernel
      KernelResult ka = a.maps()[i].kernel();
      KernelResult kb = b.maps()[i].kernel();
      ModuleMap restricted(ka.module, components[i].target(),
                           components[i].matrix() * ka.inclusion);
      out.push_back(lift_through_kernel(kb, restricted));
    } else if (!has_out) {
      // cokernel -> cokernel: same matrix on generators
      out.push_back(ModuleMap(a.maps()[i - 1].cokernel(), b.maps()[i - 1].cokernel(),
                              components[i].matrix()));
    } else {
      KernelResult ka = a.maps()[i].kernel();
      KernelResult kb = b.maps()[i].kernel();
      ModuleMap restricted(ka.module, components[i].target(),
                           components[i].matrix() * ka.inclusion);
      ModuleMap lifted = lift_through_kernel(kb, restricted);
      FPModule ha = homology_at(a.maps()[i - 1], a.maps()[i]);
      FPModule hb = homology_at(b.maps()[i - 1], b.maps()[i]);
      out.push_back(ModuleMap(ha, hb, lifted.matrix()));
    }
  }
  return out;
}

}  // namespace qmirror
