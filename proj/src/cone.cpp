#include "lieprop/cone.hpp"

#include <numeric>
#include <stdexcept>

#include "lieprop/weyl.hpp"

namespace lieprop {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Indicator vectors of the node classes (tied by arrows and optionally by
// iota) that contain no black node, ordered by smallest member.
std::vector<WeightedDynkinDiagram> free_classes(const SatakeDiagram& s, bool tie_iota) {
  const int n = s.rank();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    if (s.partner[i] >= 0) uf.unite(i, s.partner[i]);
  if (tie_iota) {
    const auto pi = minus_w0_node_map(s.type);
    for (int i = 0; i < n; ++i) uf.unite(i, pi[i]);
  }
  std::vector<bool> dead(n, false);
  for (int i = 0; i < n; ++i)
    if (s.is_black(i)) dead[uf.find(i)] = true;
  std::vector<WeightedDynkinDiagram> out;
  for (int root = 0; root < n; ++root) {
    if (uf.find(root) != root || dead[root]) continue;
    WeightedDynkinDiagram w{RatVec(n)};
    for (int i = 0; i < n; ++i)
      if (uf.find(i) == root) w.weights[i] = 1;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<WeightedDynkinDiagram> matching_space_basis(const SatakeDiagram& s) { return free_classes(s, false); }

BPlusCone b_plus_basis(const SatakeDiagram& s) {
  BPlusCone cone;
  cone.generators = free_classes(s, true);
  cone.dimension = static_cast<int>(cone.generators.size());
  return cone;
}

int a_hyperbolic_rank(const RealFormId& id) { return b_plus_basis(catalog_lookup(id).satake).dimension; }

const RootSystem& restricted_root_system(const RealForm& g) {
  return shared_root_system(g.restricted.reduced_type());
}

RatVec restricted_labels(const RealForm& g, const WeightedDynkinDiagram& w) {
  if (!matches(w, g.satake)) throw std::invalid_argument("weighted diagram does not match the Satake diagram of " + g.name);
  RatVec labels(g.real_rank());
  for (int i = 0; i < g.satake.rank(); ++i) {
    const int k = g.restricted.restriction[i];
    if (k >= 0) labels[k] = w.weights[i];
  }
  return labels;
}

RatVec restricted_vector(const RealForm& g, const WeightedDynkinDiagram& w) {
  return restricted_root_system(g).from_labels(restricted_labels(g, w));
}

WeightedDynkinDiagram diagram_of_restricted_vector(const RealForm& g, const RatVec& h) {
  const RatVec labels = restricted_root_system(g).to_labels(h);
  WeightedDynkinDiagram w{RatVec(g.satake.rank())};
  for (int i = 0; i < g.satake.rank(); ++i) {
    const int k = g.restricted.restriction[i];
    if (k >= 0) w.weights[i] = labels[k];
  }
  return w;
}

}  // namespace lieprop
