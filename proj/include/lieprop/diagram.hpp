#pragma once

// Identification of Dynkin diagrams from Gram matrices, and isomorphisms
// between decorated diagrams.

#include <optional>
#include <vector>

#include "lieprop/lie_type.hpp"

namespace lieprop {

using IntMat = std::vector<std::vector<int>>;

/// A connected piece of a diagram. `nodes[k]` is the input node that sits at
/// position k of the standard diagram for `type`.
struct Component {
  LieType type;
  std::vector<int> nodes;
};

/// Splits the diagram with the given Gram matrix (any positive scale) into
/// connected components and identifies each; components are ordered by their
/// smallest input node.
std::vector<Component> decompose_diagram(const IntMat& gram);

/// Identifies a connected diagram. Throws std::invalid_argument when the Gram
/// matrix is not that of a finite connected Dynkin diagram.
Component identify_connected(const IntMat& gram);

/// Cartan integers <a_i, a_j^vee> from a Gram matrix.
IntMat cartan_from_gram(const IntMat& gram);

/// Node decorations used by Satake diagrams: a color per node and an
/// involutive partner (or -1).
struct Decoration {
  std::vector<int> color;
  std::vector<int> partner;
};

/// All bijections f with cartan_b[f(i)][f(j)] == cartan_a[i][j] that carry
/// decoration a onto decoration b; stops after `limit` results.
std::vector<std::vector<int>> diagram_isomorphisms(const IntMat& cartan_a, const Decoration& a,
                                                   const IntMat& cartan_b, const Decoration& b,
                                                   std::size_t limit = 1);

}  // namespace lieprop
