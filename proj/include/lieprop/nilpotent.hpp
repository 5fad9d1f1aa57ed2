#pragma once

// Nilpotent orbits of classical complex simple Lie algebras, labelled by
// partitions, and their weighted Dynkin diagrams.

#include <string>
#include <string_view>
#include <vector>

#include "lieprop/lie_type.hpp"
#include "lieprop/satake.hpp"

namespace lieprop {

enum class OrbitTag { none, I, II };

struct PartitionLabel {
  /// Weakly decreasing positive parts.
  std::vector<int> parts;
  OrbitTag tag = OrbitTag::none;

  int sum() const;
  bool operator==(const PartitionLabel&) const = default;
  auto operator<=>(const PartitionLabel&) const = default;
};

/// "[3,2^2,1]" with a "^I"/"^II" suffix for tagged labels.
std::string to_string(const PartitionLabel& p);

/// Accepts "[3,2^2,1]", "3,2,2,1", "[2^4]^II" and similar.
PartitionLabel parse_partition(std::string_view text);

/// Size of the natural representation: m+1 for A_m, 2m+1 for B_m, 2m for C_m and D_m.
int natural_dimension(const LieType& t);

/// Parses "sl4", "so7", "sp6", "so8" (or a type name such as "C3").
LieType parse_classical_algebra(std::string_view text);

bool is_very_even(const std::vector<int>& parts);

/// Checks sum, ordering and the multiplicity and tag rules of the type.
bool is_valid_label(const LieType& t, const PartitionLabel& p);

/// All orbit labels in reverse-lexicographic order, tag I before tag II.
/// Throws std::invalid_argument for exceptional types or a wrong ambient size.
std::vector<PartitionLabel> enumerate_orbits(const LieType& t, int n_ambient);
std::vector<PartitionLabel> enumerate_orbits(const LieType& t);

/// Concatenation of the strings (d-1, d-3, ..., 1-d) over the parts.
std::vector<int> eigenvalue_strings(const PartitionLabel& p);

struct DiagonalProfile {
  std::vector<int> entries;
  bool operator==(const DiagonalProfile&) const = default;
};

/// The Weyl-normalized diagonal: sorted descending for A; (h, -h) for C and
/// D; (0, h, -h) for B, where h is the largest half of the eigenvalues.
DiagonalProfile diagonal_profile(const PartitionLabel& p, const LieType& t);

WeightedDynkinDiagram weighted_dynkin(const PartitionLabel& p, const LieType& t);

}  // namespace lieprop
