#pragma once

// Satake diagrams of the semisimple parts of parabolic subalgebras.

#include <set>
#include <string>
#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/satake.hpp"

namespace lieprop {

/// One simple factor of the induced diagram. A pair of components swapped by
/// arrows is a single complex factor and is kept together.
struct SatakeComponent {
  /// Ambient nodes, listed in the standard order of `diagram` (for a complex
  /// factor the two halves follow each other).
  std::vector<int> nodes;
  /// For a complex factor, the diagram of one half.
  SatakeDiagram diagram;
  /// Catalog or compact name, or e.g. "sl(2,C)" for a complex factor.
  std::string name;
  bool complex_pair = false;
};

/// Induced diagram on the black nodes together with sigma, split into simple
/// factors ordered by rank, then name, then smallest node. Throws
/// std::invalid_argument unless sigma is a set of white nodes closed under
/// the arrows.
std::vector<SatakeComponent> parabolic_semisimple_satake(const SatakeDiagram& s, const std::set<int>& sigma);

/// Factor names in order.
std::vector<std::string> component_names(const std::vector<SatakeComponent>& comps);

/// "su(2)+su(2)+su*(6)", or "0" when there are no factors.
std::string semisimple_name(const std::vector<SatakeComponent>& comps);

/// The complex simple algebra viewed as real: sl(n+1,C), so(2n+1,C), ...
std::string complex_form_name(const LieType& t);

}  // namespace lieprop
