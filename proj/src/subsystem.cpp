#include "lieprop/subsystem.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieprop {

bool canonical_root_less(const RootVector& a, const RootVector& b) {
  const bool pa = a.is_positive(), pb = b.is_positive();
  if (pa != pb) return pa;
  const int ha = std::abs(a.height()), hb = std::abs(b.height());
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

bool is_closed_symmetric(const RootSystem& sys, const std::set<RootVector>& roots) {
  for (const auto& a : roots) {
    if (!roots.count(-a)) return false;
    for (const auto& b : roots) {
      const RootVector s = a + b;
      if (sys.is_root(s) && !roots.count(s)) return false;
    }
  }
  return true;
}

Subsystem closed_subsystem(const RootSystem& sys, const std::vector<RootVector>& generators) {
  Subsystem sub;
  std::vector<RootVector> pending;
  auto add = [&](const RootVector& r) {
    if (sub.roots.insert(r).second) pending.push_back(r);
  };
  for (const auto& g : generators) {
    if (!sys.is_root(g)) throw std::invalid_argument("generator is not a root of " + to_string(sys.type()));
    add(g);
    add(-g);
  }
  while (!pending.empty()) {
    const RootVector a = pending.back();
    pending.pop_back();
    add(-a);
    const std::vector<RootVector> current(sub.roots.begin(), sub.roots.end());
    for (const auto& b : current) {
      const RootVector s = a + b;
      if (sys.is_root(s)) add(s);
    }
  }
  return sub;
}

Subsystem reflection_subsystem(const RootSystem& sys, const std::vector<RootVector>& generators) {
  Subsystem sub;
  for (const auto& g : generators) {
    if (!sys.is_root(g)) throw std::invalid_argument("generator is not a root of " + to_string(sys.type()));
    sub.roots.insert(g);
    sub.roots.insert(-g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<RootVector> current(sub.roots.begin(), sub.roots.end());
    for (const auto& b : current) {
      const int bb = sys.pairing(b, b);
      for (const auto& a : current) {
        // s_b(a) = a - 2(a,b)/(b,b) b stays in the root lattice.
        const int c = 2 * sys.pairing(a, b) / bb;
        if (c == 0) continue;
        RootVector r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= c * b.coeffs[i];
        if (sub.roots.insert(r).second) grew = true;
      }
    }
  }
  return sub;
}

Subsystem orthogonal_complement(const RootSystem& sys, const Subsystem& sub) {
  for (const auto& r : sub.roots)
    if (!sys.is_root(r)) throw std::invalid_argument("subsystem contains a vector that is not a root of " + to_string(sys.type()));
  Subsystem out;
  for (const auto& a : sys.roots()) {
    bool orth = true;
    for (const auto& b : sub.roots)
      if (sys.pairing(a, b) != 0) {
        orth = false;
        break;
      }
    if (orth) out.roots.insert(a);
  }
  return out;
}

std::vector<RootVector> simple_system(const RootSystem& sys, const Subsystem& sub) {
  (void)sys;
  std::vector<RootVector> positive;
  for (const auto& r : sub.roots)
    if (r.is_positive()) positive.push_back(r);
  std::set<RootVector> pos_set(positive.begin(), positive.end());
  std::vector<RootVector> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      RootVector b = r + (-a);
      if (pos_set.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(), canonical_root_less);
  return simple;
}

std::vector<Component> subsystem_components(const RootSystem& sys, const Subsystem& sub) {
  const auto simple = simple_system(sys, sub);
  IntMat gram(simple.size(), std::vector<int>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) gram[i][j] = sys.pairing(simple[i], simple[j]);
  return decompose_diagram(gram);
}

std::string subsystem_type_name(const std::vector<Component>& comps) {
  if (comps.empty()) return "0";
  std::vector<LieType> types;
  for (const auto& c : comps) types.push_back(c.type);
  std::sort(types.begin(), types.end(), [](const LieType& a, const LieType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
  std::string s;
  for (const auto& t : types) {
    if (!s.empty()) s += '+';
    s += to_string(t);
  }
  return s;
}

}  // namespace lieprop
