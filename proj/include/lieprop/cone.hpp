#pragma once

// The cone of antipodal hyperbolic elements in the dominant restricted chamber.

#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/root_system.hpp"
#include "lieprop/satake.hpp"

namespace lieprop {

struct BPlusCone {
  std::vector<WeightedDynkinDiagram> generators;
  int dimension = 0;
};

/// Basis of the space of weighted diagrams that match `s`, as 0/1 indicators
/// of the free node classes. Its size is the real rank.
std::vector<WeightedDynkinDiagram> matching_space_basis(const SatakeDiagram& s);

/// Generators of the cone: matching and iota-fixed indicator diagrams.
BPlusCone b_plus_basis(const SatakeDiagram& s);

int a_hyperbolic_rank(const RealFormId& id);

/// The reduced restricted root system of a real form.
const RootSystem& restricted_root_system(const RealForm& g);

/// Restricted Dynkin labels k -> lambda_k(H) of a matching diagram.
RatVec restricted_labels(const RealForm& g, const WeightedDynkinDiagram& w);

/// The element H of the restricted Cartan space, in restricted simple-root
/// coordinates, whose weighted diagram is w. Throws std::invalid_argument if
/// w does not match the Satake diagram.
RatVec restricted_vector(const RealForm& g, const WeightedDynkinDiagram& w);

/// Inverse of restricted_vector.
WeightedDynkinDiagram diagram_of_restricted_vector(const RealForm& g, const RatVec& h);

}  // namespace lieprop
