#pragma once

#include <unordered_set>

#include "lieprop/int_vec_hash.hpp"

namespace lieprop {

template <class Visit>
void for_each_weyl_image(const RootSystem& sys, const std::vector<IntVec>& basis, std::size_t cap, Visit&& visit) {
  struct Node {
    IntVec point;
    std::vector<IntVec> images;
  };
  std::unordered_set<IntVec, IntVecHash> seen;
  std::vector<Node> frontier{{regular_dominant_point(sys), basis}};
  seen.insert(frontier.front().point);
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (auto& node : frontier) {
      visit(static_cast<const std::vector<IntVec>&>(node.images));
      for (int i = 0; i < sys.rank(); ++i) {
        IntVec p = sys.reflect(i, node.point);
        if (seen.count(p)) continue;
        if (seen.size() >= cap) throw OrbitTooLarge(cap);
        seen.insert(p);
        Node child{std::move(p), {}};
        child.images.reserve(node.images.size());
        for (const auto& b : node.images) child.images.push_back(sys.reflect(i, b));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace lieprop
