#pragma once

// Homogeneous spaces G/H certified to admit proper SL(2,R)-actions.

#include <optional>
#include <string>
#include <vector>

#include "lieprop/catalog.hpp"
#include "lieprop/proper.hpp"

namespace lieprop {

struct ExampleRecord {
  std::string g;
  /// Group-style name of H ("SL(3,R)×SL(2,R)") for split records, or the
  /// semisimple factor list ("su(2)+su(2)+su*(6)") for parabolic ones.
  std::string h;
  std::vector<std::string> h_components;
  /// "simple-roots", "extended-diagram" or "parabolic".
  std::string method;
  /// Type of the restricted subsystem of H, e.g. "A2+A1".
  std::string subsystem_type;
  /// Simple roots of that subsystem in restricted coordinates.
  std::vector<RootVector> generators;
  /// Parabolic records: the subset C of restricted simple roots (0-based)
  /// and the Satake nodes deleted from the diagram of g (0-based).
  std::vector<int> restricted_subset;
  std::vector<int> deleted_nodes;
  Criterion criterion = Criterion::orthogonality;
  RootVector witness;
  std::optional<int> witness_node;
  /// Parabolic records: some extended-diagram node outside C is adjacent to
  /// no root of C.
  bool extended_node_rule = false;
};

/// Group name of the split real form of a simple type: SL(k+1,R),
/// SO(k,k+1), Sp(2k,R), SO(k,k), E6^I, E7^V, E8^VIII, F4^I, G2^*.
std::string split_group_name(const LieType& t);

/// Closed symmetric subsystems generated by subsets of the simple roots and,
/// up to `depth` levels, of Borel-de Siebenthal systems (extended diagram
/// minus one node), kept when their orthogonal complement is nonempty.
/// Includes the empty subsystem. Throws std::invalid_argument unless g is split.
std::vector<ExampleRecord> split_case_generate(const RealFormId& g, int depth = 1);

/// For every nonempty subset C of restricted simple roots whose generated
/// subsystem has a nonempty orthogonal complement, the parabolic factor
/// obtained by deleting the white nodes restricting outside C.
std::vector<ExampleRecord> parabolic_procedure(const RealFormId& g);

/// Reruns the certifying criterion and checks the witness.
bool reverify(const ExampleRecord& r);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct ListCheck {
  std::string list;      // "split" or "parabolic"
  std::string family;    // as printed, e.g. "SL(n,R)/SL(k,R), 2<=k<=n-2"
  std::string instance;  // e.g. "SL(6,R)/SL(3,R)"
  bool exceptional = false;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

/// Instantiates the printed example lists at complex rank <= max_rank.
std::vector<ListCheck> verify_published_lists(int max_rank = 8);

struct FamilySummary {
  std::string list;
  std::string family;
  bool exceptional = false;
  int passed = 0, failed = 0, skipped = 0;
  CheckStatus status() const;
};

/// Aggregates checks per family, in first-appearance order.
std::vector<FamilySummary> summarize(const std::vector<ListCheck>& checks);

}  // namespace lieprop
