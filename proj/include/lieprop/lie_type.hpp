#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lieprop {

/// Cartan-Killing family. BC only ever describes a non-reduced restricted root
/// system; its Weyl group and indivisible roots are those of B_n.
enum class Family { A, B, C, D, E, F, G, BC };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument unless the pair names a simple type.
  /// D2 and D3 are rejected as aliases of A1+A1 and A3.
  void validate() const;
  bool is_classical() const;

  auto operator<=>(const LieType&) const = default;
};

/// Validated construction.
LieType make_type(Family f, int rank);

std::string to_string(Family f);
std::string to_string(const LieType& t);

/// Parses "A4", "e6", "BC2", ... (case-insensitive).
LieType parse_lie_type(std::string_view text);

/// Equality up to the low-rank coincidences B2=C2, BC_n vs B_n excluded.
bool isomorphic_types(const LieType& a, const LieType& b);

/// Number of positive roots of the indivisible root system.
int positive_root_count(const LieType& t);

/// Order of the Weyl group; as long long since W(E8) ~ 7e8.
long long weyl_group_order(const LieType& t);

/// Integer symmetric Gram matrix of the simple roots, normalized so that the
/// shortest simple root has squared length 2. Node order is Bourbaki's for
/// A-D, F, G. For E_n the nodes are a chain 0..n-2 with node n-1 attached to
/// chain node 2 (the E6 order is a,b,c,d,e along the chain and f on the branch).
std::vector<std::vector<int>> simple_root_gram(const LieType& t);

}  // namespace lieprop
