#pragma once

// The catalog of noncompact real simple Lie algebras.
//
// Record grammar, one form per line ('#' starts a comment line):
//
//   name | type | colors | arrows | restricted_type | restriction_map
//
//   colors           bitstring over nodes 1..rank, 1 = black
//   arrows           space-separated pairs "i-j" (1-based), or "-"
//   restricted_type  e.g. "A4", "BC2" (BC marks a non-reduced system)
//   restriction_map  space-separated "node:k", sending white node `node` to
//                    restricted simple root k (both 1-based)

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lieprop/lie_type.hpp"
#include "lieprop/satake.hpp"

namespace lieprop {

struct RestrictedRootDatum {
  /// May have family BC.
  LieType restricted_type;
  /// Restricted simple root index for each node; -1 on black nodes.
  std::vector<int> restriction;

  int real_rank() const { return restricted_type.rank; }
  /// Type whose Weyl group and indivisible roots are used: BC_n -> B_n, BC_1 -> A_1.
  LieType reduced_type() const;
  bool is_reduced() const { return restricted_type.family != Family::BC; }

  bool operator==(const RestrictedRootDatum&) const = default;
};

struct RealForm {
  std::string name;
  SatakeDiagram satake;
  RestrictedRootDatum restricted;

  bool is_split() const { return satake.is_split(); }
  int real_rank() const { return restricted.real_rank(); }
};

/// Canonical catalog key such as "su*(10)", "so(5,5)" or "E6^IV".
struct RealFormId {
  std::string name;

  bool operator==(const RealFormId&) const = default;
};

/// Parses user input ("su*10", "SO(5,5)", "e6^iv", "g2*", "sl4R", ...) into a
/// canonical id, resolving isomorphic aliases such as su(1,1) -> sl(2,R).
/// Throws std::invalid_argument for unknown, compact, non-simple or
/// unnormalized (p > q) names.
RealFormId parse_form_name(std::string_view text);

/// Parses catalog text; validates every record and throws
/// std::invalid_argument with the offending line number on error.
std::vector<RealForm> parse_catalog(std::string_view text);

std::string_view embedded_catalog_text();

/// 64-bit FNV-1a of the text.
std::uint64_t catalog_checksum(std::string_view text);

class Catalog {
 public:
  explicit Catalog(std::vector<RealForm> forms);

  /// The embedded catalog, parsed once.
  static const Catalog& builtin();

  const std::vector<RealForm>& forms() const { return forms_; }
  const RealForm* find(std::string_view canonical_name) const;
  /// Throws std::invalid_argument when absent.
  const RealForm& lookup(const RealFormId& id) const;

 private:
  std::vector<RealForm> forms_;
};

const RealForm& catalog_lookup(const RealFormId& id);
/// Convenience: parse_form_name then lookup.
const RealForm& catalog_lookup(std::string_view text);

int real_rank(const RealFormId& id);

/// Name of the compact real form of a simple type: su(n+1), so(2n+1), sp(n),
/// so(2n), e6, e7, e8, f4, g2.
std::string compact_form_name(const LieType& t);

/// Names a connected Satake diagram: a catalog entry whose diagram is
/// isomorphic to it, or the compact form when every node is black.
/// Throws std::invalid_argument when nothing matches.
std::string identify_real_form(const SatakeDiagram& s);

}  // namespace lieprop
