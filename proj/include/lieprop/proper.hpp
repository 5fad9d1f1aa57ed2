#pragma once

// Decision procedures for proper SL(2,R)-actions on G/H.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/subsystem.hpp"
#include "lieprop/weyl.hpp"

namespace lieprop {

enum class Admits { yes, no, undetermined };
enum class Criterion { rank_one, orthogonality, okuda, kobayashi, subgroup_closure };

std::string to_string(Admits a);
std::string to_string(Criterion c);

struct ProperVerdict {
  Admits admits = Admits::undetermined;
  Criterion criterion = Criterion::orthogonality;
  /// Orthogonal restricted root (orthogonality criteria).
  std::optional<RootVector> orthogonal_root;
  /// Extended-diagram position of orthogonal_root: 0 for minus the highest
  /// root, k for the simple root lambda_k.
  std::optional<int> extended_node;
  /// Independent cone generators (rank-one criterion).
  std::vector<WeightedDynkinDiagram> generators;
  /// Weighted diagram of the orbit that avoids, or the point that meets, a_h.
  std::optional<WeightedDynkinDiagram> orbit_diagram;
  std::optional<RatVec> meeting_point;
  std::string note;

  bool has_witness() const;
};

/// H reductive of real rank one: yes iff the a-hyperbolic rank is at least 2.
ProperVerdict decide_rank_one(const RealFormId& g);

/// Real rank one, or one of sl(3,R), su*(6), E6^IV.
bool is_rank_one_exception(const RealFormId& g);
std::vector<RealFormId> rank_one_exceptions();

/// A root of sys orthogonal to sub, preferring extended-diagram nodes
/// (minus the highest root first, then simple roots in order).
std::optional<RootVector> orthogonal_witness(const RootSystem& sys, const Subsystem& sub, std::optional<int>* node = nullptr);

/// Sufficient test: yes with a witness when (R_h)^perp is nonempty, else
/// undetermined. `h_sub` lives in the reduced restricted root system of g and
/// must be closed and symmetric.
ProperVerdict orthogonality_criterion(const RealFormId& g, const Subsystem& h_sub);

/// The same test for the subsystem generated by restricted simple roots
/// (0-based indices).
ProperVerdict white_subset_criterion(const RealFormId& g, const std::set<int>& restricted_indices);

/// Variant taking a set of white Satake nodes; throws std::invalid_argument
/// unless it is a set of white nodes closed under the arrows.
ProperVerdict white_subset_criterion_nodes(const RealFormId& g, const std::set<int>& white_nodes);

/// alpha(H) = 2 for every restricted simple root.
RatVec principal_restricted_vector(const RealForm& g);

/// Span of a subsystem inside the restricted Cartan space (rows).
RatMat subsystem_span(const Subsystem& sub);

/// Whether the restricted Weyl orbit of H avoids span(a_h). Undetermined when
/// the orbit exceeds the cap.
ProperVerdict okuda_check(const RealFormId& g, const RatMat& a_h, const RatVec& h_phi,
                          std::size_t cap = kDefaultOrbitCap);

/// Whether w(a_l) meets a_h only in 0 for every w in the restricted Weyl
/// group. Throws OrbitTooLarge when the group exceeds the cap.
bool kobayashi_check(const RealFormId& g, const RatMat& a_h, const RatMat& a_l, std::size_t cap = kDefaultOrbitCap);

/// A yes for G/H passes to G/H' for H' in H. When component lists
/// are given, H' must be a sub-multiset of H. Throws std::invalid_argument
/// unless the input verdict is yes (and the containment holds).
ProperVerdict subgroup_closure(const ProperVerdict& v);
ProperVerdict subgroup_closure(const ProperVerdict& v, const std::vector<std::string>& h_components,
                               const std::vector<std::string>& sub_components);

}  // namespace lieprop
