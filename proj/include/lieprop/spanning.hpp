#pragma once

// Families of nilpotent orbits whose weighted diagrams span the cone of a
// real form.

#include <optional>
#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/nilpotent.hpp"

namespace lieprop {

struct SpanningMember {
  /// Empty for exceptional families given directly as diagrams.
  std::optional<PartitionLabel> label;
  WeightedDynkinDiagram diagram;
};

/// True when spanning_family supports the form.
bool has_spanning_family(const RealForm& g);

/// The candidate template partitions for the complex type, filtered to the
/// members whose diagrams match the Satake diagram, are iota-fixed and are
/// nonzero. Covers sl(n,R), su*(2n), su(p,q), so(p,q), sp(2n,R), sp(p,q),
/// so*(2n) and E6^I; throws std::invalid_argument otherwise.
std::vector<SpanningMember> spanning_family(const RealFormId& id);

/// Dimension of the span of the family's diagrams.
int spanning_dimension(const std::vector<SpanningMember>& family);

}  // namespace lieprop
