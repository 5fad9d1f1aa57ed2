#pragma once

// Satake diagrams and weighted Dynkin diagrams over a common node set.

#include <string>
#include <vector>

#include "lieprop/lie_type.hpp"
#include "lieprop/linalg.hpp"

namespace lieprop {

enum class NodeColor { white, black };

struct SatakeDiagram {
  LieType type;
  std::vector<NodeColor> colors;
  /// Arrow partner of each node, or -1.
  std::vector<int> partner;

  int rank() const { return type.rank; }
  bool is_black(int i) const { return colors.at(i) == NodeColor::black; }
  std::vector<int> white_nodes() const;
  bool has_arrows() const;
  /// All white and no arrows.
  bool is_split() const;

  /// Throws std::invalid_argument when arrows touch black nodes, are not an
  /// involution, or are not induced by an automorphism of the Dynkin diagram.
  void validate() const;

  bool operator==(const SatakeDiagram&) const = default;
};

/// Node weights of a dominant element; the index set is that of the ambient
/// Dynkin diagram.
struct WeightedDynkinDiagram {
  RatVec weights;

  std::size_t size() const { return weights.size(); }
  bool operator==(const WeightedDynkinDiagram&) const = default;
  auto operator<=>(const WeightedDynkinDiagram& o) const { return weights <=> o.weights; }
};

WeightedDynkinDiagram weighted_from_ints(const std::vector<int>& w);
std::string to_string(const WeightedDynkinDiagram& w);

/// Black nodes carry weight 0 and arrow-joined nodes carry equal weights.
/// Throws std::invalid_argument on a node-count mismatch.
bool matches(const WeightedDynkinDiagram& w, const SatakeDiagram& s);

/// Permutes weights by the -w0 diagram automorphism of `type`.
WeightedDynkinDiagram iota_apply(const WeightedDynkinDiagram& w, const LieType& type);

bool is_iota_fixed(const WeightedDynkinDiagram& w, const LieType& type);

/// Weight 2 on white nodes and 0 on black ones.
WeightedDynkinDiagram principal_orbit_diagram(const SatakeDiagram& s);

}  // namespace lieprop
