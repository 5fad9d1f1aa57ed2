#pragma once

#include <set>
#include <string>
#include <vector>

#include "lieprop/diagram.hpp"
#include "lieprop/root_system.hpp"

namespace lieprop {

/// A set of roots of an ambient system. Closedness and symmetry are checked by
/// is_closed_symmetric, not enforced on construction.
struct Subsystem {
  std::set<RootVector> roots;

  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
  bool operator==(const Subsystem&) const = default;
};

bool is_closed_symmetric(const RootSystem& sys, const std::set<RootVector>& roots);

/// Smallest closed symmetric subsystem containing the generators. Throws
/// std::invalid_argument if a generator is not a root.
Subsystem closed_subsystem(const RootSystem& sys, const std::vector<RootVector>& generators);

/// Smallest subset containing the generators and stable under their
/// reflections. May fail to be closed, e.g. the short D_k inside C_n.
Subsystem reflection_subsystem(const RootSystem& sys, const std::vector<RootVector>& generators);

/// Roots of sys orthogonal to every root of sub.
Subsystem orthogonal_complement(const RootSystem& sys, const Subsystem& sub);

/// Simple roots of sub relative to the ambient positive system.
std::vector<RootVector> simple_system(const RootSystem& sys, const Subsystem& sub);

/// Cartan-type decomposition of a subsystem.
std::vector<Component> subsystem_components(const RootSystem& sys, const Subsystem& sub);

/// "A2+A1", or "0" for the empty subsystem.
std::string subsystem_type_name(const std::vector<Component>& comps);

/// Sort key: positive roots before negative, then by height and coordinates.
bool canonical_root_less(const RootVector& a, const RootVector& b);

}  // namespace lieprop
