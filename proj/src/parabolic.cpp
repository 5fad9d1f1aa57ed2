#include "lieprop/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieprop/diagram.hpp"

namespace lieprop {

std::string complex_form_name(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return "sl(" + std::to_string(n + 1) + ",C)";
    case Family::B:
      return "so(" + std::to_string(2 * n + 1) + ",C)";
    case Family::C:
      return "sp(" + std::to_string(2 * n) + ",C)";
    case Family::D:
      return "so(" + std::to_string(2 * n) + ",C)";
    default:
      return to_string(t) + "(C)";
  }
}

std::vector<SatakeComponent> parabolic_semisimple_satake(const SatakeDiagram& s, const std::set<int>& sigma) {
  for (int i : sigma) {
    if (i < 0 || i >= s.rank() || s.is_black(i)) throw std::invalid_argument("sigma must consist of white nodes");
    if (s.partner[i] >= 0 && !sigma.count(s.partner[i])) throw std::invalid_argument("sigma is not closed under the arrows");
  }
  std::vector<int> kept;
  for (int i = 0; i < s.rank(); ++i)
    if (s.is_black(i) || sigma.count(i)) kept.push_back(i);
  const auto gram = simple_root_gram(s.type);
  IntMat sub(kept.size(), std::vector<int>(kept.size()));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b) sub[a][b] = gram[kept[a]][kept[b]];

  std::vector<SatakeComponent> out;
  std::vector<int> owner(s.rank(), -1);
  const auto comps = kept.empty() ? std::vector<Component>{} : decompose_diagram(sub);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int local : comps[c].nodes) owner[kept[local]] = static_cast<int>(c);
  std::vector<bool> done(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (done[c]) continue;
    done[c] = true;
    SatakeComponent sc;
    sc.diagram.type = comps[c].type;
    for (int local : comps[c].nodes) sc.nodes.push_back(kept[local]);
    const int first_partner = s.partner[sc.nodes.front()];
    if (first_partner >= 0 && owner[first_partner] != static_cast<int>(c)) {
      // Arrows swap this component with another one: a complex factor.
      const int other = owner[first_partner];
      done[other] = true;
      sc.complex_pair = true;
      sc.name = complex_form_name(comps[c].type);
      for (int node : sc.nodes) sc.diagram.colors.push_back(s.colors[node]);
      sc.diagram.partner.assign(sc.nodes.size(), -1);
      for (int node : std::vector<int>(sc.nodes)) sc.nodes.push_back(s.partner[node]);
      out.push_back(std::move(sc));
      continue;
    }
    for (int node : sc.nodes) {
      sc.diagram.colors.push_back(s.colors[node]);
      const int p = s.partner[node];
      const auto pos = std::find(sc.nodes.begin(), sc.nodes.end(), p);
      sc.diagram.partner.push_back(p >= 0 ? static_cast<int>(pos - sc.nodes.begin()) : -1);
    }
    sc.diagram.validate();
    sc.name = identify_real_form(sc.diagram);
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const SatakeComponent& a, const SatakeComponent& b) {
    const int ra = static_cast<int>(a.nodes.size()), rb = static_cast<int>(b.nodes.size());
    if (ra != rb) return ra < rb;
    if (a.name != b.name) return a.name < b.name;
    return *std::min_element(a.nodes.begin(), a.nodes.end()) < *std::min_element(b.nodes.begin(), b.nodes.end());
  });
  return out;
}

std::vector<std::string> component_names(const std::vector<SatakeComponent>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.name);
  return out;
}

std::string semisimple_name(const std::vector<SatakeComponent>& comps) {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& c : comps) out += (out.empty() ? "" : "+") + c.name;
  return out;
}

}  // namespace lieprop
