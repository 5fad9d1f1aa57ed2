#pragma once

// Weyl group actions on simple-root coordinates.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "lieprop/root_system.hpp"

namespace lieprop {

/// Default refusal threshold for orbit enumeration.
inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/// Cap from LIEPROP_ORBIT_CAP when set and valid, else the default.
std::size_t orbit_cap_from_env();

class OrbitTooLarge : public std::runtime_error {
 public:
  OrbitTooLarge(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// A product of simple reflections s_{word[0]} s_{word[1]} ..., applied right
/// to left. Words are not reduced.
struct WeylElement {
  std::vector<int> word;

  RatVec apply(const RootSystem& sys, const RatVec& v) const;
  /// Equality as group elements, tested on a regular point.
  bool same_action(const RootSystem& sys, const WeylElement& other) const;
};

/// Full orbit {w v}; throws OrbitTooLarge when it exceeds `cap` points.
std::set<RatVec> weyl_orbit(const RootSystem& sys, const RatVec& v, std::size_t cap = kDefaultOrbitCap);

/// Integer-lattice variant used by the decision procedures.
std::vector<IntVec> weyl_orbit_int(const RootSystem& sys, const IntVec& v, std::size_t cap);

bool is_dominant(const RootSystem& sys, const RatVec& v);

/// The unique closed-dominant point of the orbit, with a word w such that
/// w.apply(v) is that point.
RatVec dominant_representative(const RootSystem& sys, const RatVec& v, WeylElement* word = nullptr);

/// A (reduced) word for the longest element.
WeylElement longest_element(const RootSystem& sys);

/// The diagram automorphism pi with -w0(alpha_i) = alpha_{pi(i)}.
std::vector<int> minus_w0_node_map(const LieType& t);

/// A strictly dominant integer point (rho in root coordinates, scaled).
IntVec regular_dominant_point(const RootSystem& sys);

/// Visits the images w(basis) for every w in W, one call per element.
/// Throws OrbitTooLarge when |W| exceeds cap.
template <class Visit>
void for_each_weyl_image(const RootSystem& sys, const std::vector<IntVec>& basis, std::size_t cap, Visit&& visit);

}  // namespace lieprop

#include "lieprop/weyl_impl.hpp"
