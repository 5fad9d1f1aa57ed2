#include "lieprop/satake.hpp"

#include <stdexcept>
#include <utility>

#include "lieprop/weyl.hpp"

namespace lieprop {

std::vector<int> SatakeDiagram::white_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (!is_black(i)) out.push_back(i);
  return out;
}

bool SatakeDiagram::has_arrows() const {
  for (int p : partner)
    if (p >= 0) return true;
  return false;
}

bool SatakeDiagram::is_split() const { return white_nodes().size() == colors.size() && !has_arrows(); }

void SatakeDiagram::validate() const {
  type.validate();
  const int n = rank();
  if (static_cast<int>(colors.size()) != n || static_cast<int>(partner.size()) != n)
    throw std::invalid_argument("Satake diagram size does not match " + to_string(type));
  for (int i = 0; i < n; ++i) {
    const int p = partner[i];
    if (p < 0) continue;
    if (p >= n || p == i) throw std::invalid_argument("arrow endpoint out of range");
    if (partner[p] != i) throw std::invalid_argument("arrows are not an involution");
    if (is_black(i) || is_black(p)) throw std::invalid_argument("arrow touches a black node");
  }
  if (!has_arrows()) return;
  // Real forms only carry arrows from an order-two symmetry of A, D or E6.
  std::vector<int> flip(n);
  for (int i = 0; i < n; ++i) flip[i] = i;
  if (type.family == Family::A) {
    for (int i = 0; i < n; ++i) flip[i] = n - 1 - i;
  } else if (type.family == Family::D && n == 4) {
    // Any swap of two outer nodes; relabelled components need all three.
    for (int i : {0, 2, 3})
      if (partner[i] >= 0) flip[i] = partner[i];
    if (flip[1] != 1 || partner[1] >= 0) throw std::invalid_argument("arrow on the central node of D4");
  } else if (type.family == Family::D) {
    std::swap(flip[n - 2], flip[n - 1]);
  } else if (type.family == Family::E && n == 6) {
    for (int i = 0; i < 5; ++i) flip[i] = 4 - i;
  }
  for (int i = 0; i < n; ++i)
    if (partner[i] >= 0 && flip[i] != partner[i])
      throw std::invalid_argument("arrow " + std::to_string(i + 1) + "<->" + std::to_string(partner[i] + 1) +
                                  " on " + to_string(type) + " is not induced by a diagram automorphism");
}

WeightedDynkinDiagram weighted_from_ints(const std::vector<int>& w) { return {to_rational(w)}; }

std::string to_string(const WeightedDynkinDiagram& w) { return to_string(w.weights); }

bool matches(const WeightedDynkinDiagram& w, const SatakeDiagram& s) {
  if (static_cast<int>(w.size()) != s.rank())
    throw std::invalid_argument("weighted diagram has " + std::to_string(w.size()) + " nodes, Satake diagram has " +
                                std::to_string(s.rank()));
  for (int i = 0; i < s.rank(); ++i) {
    if (s.is_black(i) && w.weights[i] != 0) return false;
    const int p = s.partner[i];
    if (p >= 0 && w.weights[i] != w.weights[p]) return false;
  }
  return true;
}

WeightedDynkinDiagram iota_apply(const WeightedDynkinDiagram& w, const LieType& type) {
  if (static_cast<int>(w.size()) != type.rank) throw std::invalid_argument("weighted diagram does not fit the type");
  const auto pi = minus_w0_node_map(type);
  WeightedDynkinDiagram out{RatVec(w.size())};
  for (std::size_t i = 0; i < w.size(); ++i) out.weights[pi[i]] = w.weights[i];
  return out;
}

bool is_iota_fixed(const WeightedDynkinDiagram& w, const LieType& type) { return iota_apply(w, type) == w; }

WeightedDynkinDiagram principal_orbit_diagram(const SatakeDiagram& s) {
  WeightedDynkinDiagram out{RatVec(s.rank())};
  for (int i = 0; i < s.rank(); ++i) out.weights[i] = s.is_black(i) ? 0 : 2;
  return out;
}

}  // namespace lieprop
