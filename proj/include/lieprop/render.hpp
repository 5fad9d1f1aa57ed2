#pragma once

// Text, DOT, LaTeX and JSON renderings.

#include <string>
#include <vector>

#include <json.hpp>

#include "lieprop/catalog.hpp"
#include "lieprop/cone.hpp"
#include "lieprop/examples_gen.hpp"
#include "lieprop/nilpotent.hpp"
#include "lieprop/proper.hpp"

namespace lieprop {

/// Diagram art: ○ white, ● black; bonds ──, => / <= (towards the short
/// root), <≡ for G2; D and E branch nodes drawn on a fork line; arrows listed
/// as "i<->j". Node numbers are 1-based.
std::string satake_text(const SatakeDiagram& s);
/// Weights printed above an all-white diagram.
std::string weighted_text(const WeightedDynkinDiagram& w, const LieType& t);
std::string satake_dot(const SatakeDiagram& s, const std::string& name);
std::string satake_latex(const SatakeDiagram& s);

/// Space-separated weights, e.g. "2 0 2".
std::string weights_inline(const WeightedDynkinDiagram& w);
/// "diag(3,1,-1,-3)".
std::string diag_string(const std::vector<int>& entries);

struct OrbitRow {
  PartitionLabel label;
  std::vector<int> eigenvalues;  // unsorted strings, shown for type A
  DiagonalProfile profile;
  WeightedDynkinDiagram weights;

  bool operator==(const OrbitRow&) const = default;
};

std::vector<OrbitRow> orbit_table(const LieType& t);
std::string orbit_table_text(const LieType& t, const std::vector<OrbitRow>& rows);
std::string orbit_table_latex(const LieType& t, const std::vector<OrbitRow>& rows);

std::string verdict_text(const ProperVerdict& v);
std::string records_text(const std::vector<ExampleRecord>& records);
std::string list_report_text(const std::vector<ListCheck>& checks);

using json = nlohmann::ordered_json;

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const WeightedDynkinDiagram& w);
json to_json(const SatakeDiagram& s);
json to_json(const RealForm& f);
json to_json(const PartitionLabel& p);
json to_json(const OrbitRow& r);
json to_json(const ProperVerdict& v);
json to_json(const ExampleRecord& r);
json to_json(const ListCheck& c);
json to_json(const BPlusCone& c);

WeightedDynkinDiagram weighted_from_json(const json& j);
SatakeDiagram satake_from_json(const json& j);
RealForm real_form_from_json(const json& j);
PartitionLabel partition_from_json(const json& j);
OrbitRow orbit_row_from_json(const json& j);
ProperVerdict verdict_from_json(const json& j);
ExampleRecord record_from_json(const json& j);
ListCheck list_check_from_json(const json& j);
BPlusCone cone_from_json(const json& j);

}  // namespace lieprop
