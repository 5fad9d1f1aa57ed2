#include "lieprop/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lieprop {

IntMat cartan_from_gram(const IntMat& gram) {
  const std::size_t n = gram.size();
  IntMat a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((2 * gram[i][j]) % gram[j][j] != 0) throw std::invalid_argument("Gram matrix has non-integral Cartan entries");
      a[i][j] = 2 * gram[i][j] / gram[j][j];
    }
  return a;
}

std::vector<std::vector<int>> diagram_isomorphisms(const IntMat& cartan_a, const Decoration& a, const IntMat& cartan_b,
                                                   const Decoration& b, std::size_t limit) {
  const int n = static_cast<int>(cartan_a.size());
  std::vector<std::vector<int>> found;
  if (static_cast<int>(cartan_b.size()) != n) return found;
  auto color = [](const Decoration& d, int i) { return d.color.empty() ? 0 : d.color[i]; };
  auto partner = [](const Decoration& d, int i) { return d.partner.empty() ? -1 : d.partner[i]; };
  auto degree = [n](const IntMat& c, int i) {
    int d = 0;
    for (int j = 0; j < n; ++j) d += (i != j && c[i][j] != 0);
    return d;
  };

  // Visit nodes of a in BFS order so every node after the first has an
  // already-placed neighbour (within its component).
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  for (int s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (int j = 0; j < n; ++j)
        if (!queued[j] && cartan_a[order[h]][j] != 0) {
          queued[j] = true;
          order.push_back(j);
        }
  }

  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> place = [&](int k) {
    if (found.size() >= limit) return;
    if (k == n) {
      found.push_back(f);
      return;
    }
    const int i = order[k];
    for (int j = 0; j < n; ++j) {
      if (used[j] || color(a, i) != color(b, j) || degree(cartan_a, i) != degree(cartan_b, j)) continue;
      if ((partner(a, i) < 0) != (partner(b, j) < 0)) continue;
      bool ok = true;
      for (int m = 0; m < k && ok; ++m) {
        const int p = order[m];
        if (cartan_a[i][p] != cartan_b[j][f[p]] || cartan_a[p][i] != cartan_b[f[p]][j]) ok = false;
        if (partner(a, i) == p && partner(b, j) != f[p]) ok = false;
        if (partner(a, p) == i && partner(b, f[p]) != j) ok = false;
      }
      if (!ok) continue;
      f[i] = j;
      used[j] = true;
      place(k + 1);
      used[j] = false;
      f[i] = -1;
    }
  };
  place(0);
  return found;
}

Component identify_connected(const IntMat& gram) {
  const int n = static_cast<int>(gram.size());
  if (n == 0) throw std::invalid_argument("empty diagram");
  const IntMat cartan = cartan_from_gram(gram);
  static const Family families[] = {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G};
  for (Family fam : families) {
    LieType t{fam, n};
    try {
      t.validate();
    } catch (const std::invalid_argument&) {
      continue;
    }
    const IntMat standard = cartan_from_gram(simple_root_gram(t));
    const auto iso = diagram_isomorphisms(cartan, {}, standard, {}, 1);
    if (iso.empty()) continue;
    Component c{t, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) c.nodes[iso[0][i]] = i;
    return c;
  }
  throw std::invalid_argument("not a finite Dynkin diagram");
}

std::vector<Component> decompose_diagram(const IntMat& gram) {
  const int n = static_cast<int>(gram.size());
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t h = 0; h < members.size(); ++h)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && gram[members[h]][j] != 0) {
          comp[j] = s;
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    IntMat sub(members.size(), std::vector<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) sub[i][j] = gram[members[i]][members[j]];
    Component c = identify_connected(sub);
    for (auto& node : c.nodes) node = members[node];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lieprop
