#include "lieprop/spanning.hpp"

#include <stdexcept>

namespace lieprop {

namespace {

PartitionLabel label(std::vector<std::pair<int, int>> blocks, OrbitTag tag = OrbitTag::none) {
  PartitionLabel p{{}, tag};
  for (auto [part, mult] : blocks) p.parts.insert(p.parts.end(), mult, part);
  return p;
}

// [2^k, 1^l] and, for B and D, [3, 2^{2k}, 1^l], [2^{2k}, 1^l] and the very
// even [2^{2k}]^{I,II}.
std::vector<PartitionLabel> templates(const LieType& t) {
  const int n = natural_dimension(t);
  std::vector<PartitionLabel> out;
  switch (t.family) {
    case Family::A:
    case Family::C:
      for (int k = 1; 2 * k <= n; ++k) out.push_back(label({{2, k}, {1, n - 2 * k}}));
      break;
    case Family::B:
    case Family::D:
      for (int k = 0; 3 + 4 * k <= n; ++k) out.push_back(label({{3, 1}, {2, 2 * k}, {1, n - 3 - 4 * k}}));
      for (int k = 1; 4 * k <= n; ++k) {
        if (4 * k == n) {
          out.push_back(label({{2, 2 * k}}, OrbitTag::I));
          out.push_back(label({{2, 2 * k}}, OrbitTag::II));
        } else {
          out.push_back(label({{2, 2 * k}, {1, n - 4 * k}}));
        }
      }
      break;
    default:
      break;
  }
  return out;
}

bool covered_name(const std::string& name) {
  for (const char* prefix : {"sl(", "su*(", "su(", "so(", "sp(", "so*("})
    if (name.rfind(prefix, 0) == 0) return true;
  return name == "E6^I";
}

}  // namespace

bool has_spanning_family(const RealForm& g) { return covered_name(g.name); }

std::vector<SpanningMember> spanning_family(const RealFormId& id) {
  const RealForm& g = catalog_lookup(id);
  if (!has_spanning_family(g)) throw std::invalid_argument("no spanning family is implemented for " + g.name);
  std::vector<SpanningMember> out;
  if (g.name == "E6^I") {
    // Nodes a..e along the chain, f on the branch.
    for (const auto& w : {std::vector<int>{0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 2, 0, 0, 0}})
      out.push_back({std::nullopt, weighted_from_ints(w)});
    return out;
  }
  const LieType& t = g.satake.type;
  for (const auto& p : templates(t)) {
    auto w = weighted_dynkin(p, t);
    bool zero = true;
    for (const auto& x : w.weights) zero = zero && x == 0;
    if (zero || !matches(w, g.satake) || !is_iota_fixed(w, t)) continue;
    out.push_back({p, std::move(w)});
  }
  return out;
}

int spanning_dimension(const std::vector<SpanningMember>& family) {
  RatMat rows;
  for (const auto& m : family) rows.push_back(m.diagram.weights);
  return static_cast<int>(rank(rows));
}

}  // namespace lieprop
