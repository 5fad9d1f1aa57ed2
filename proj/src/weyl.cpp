#include "lieprop/weyl.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "lieprop/int_vec_hash.hpp"

namespace lieprop {

std::size_t orbit_cap_from_env() {
  const char* env = std::getenv("LIEPROP_ORBIT_CAP");
  if (!env || !*env) return kDefaultOrbitCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  return kDefaultOrbitCap;
}

OrbitTooLarge::OrbitTooLarge(std::size_t cap)
    : std::runtime_error("orbit too large: more than " + std::to_string(cap) + " points"), cap_(cap) {}

RatVec WeylElement::apply(const RootSystem& sys, const RatVec& v) const {
  RatVec out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_reflection(sys, *it, out);
  return out;
}

bool WeylElement::same_action(const RootSystem& sys, const WeylElement& other) const {
  const RatVec rho = to_rational(regular_dominant_point(sys));
  return apply(sys, rho) == other.apply(sys, rho);
}

std::vector<IntVec> weyl_orbit_int(const RootSystem& sys, const IntVec& v, std::size_t cap) {
  std::unordered_set<IntVec, IntVecHash> seen{v};
  std::vector<IntVec> order{v};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 0; i < sys.rank(); ++i) {
      IntVec w = sys.reflect(i, order[head]);
      if (seen.count(w)) continue;
      if (order.size() >= cap) throw OrbitTooLarge(cap);
      seen.insert(w);
      order.push_back(std::move(w));
    }
  }
  return order;
}

std::set<RatVec> weyl_orbit(const RootSystem& sys, const RatVec& v, std::size_t cap) {
  if (static_cast<int>(v.size()) != sys.rank()) throw std::invalid_argument("vector length does not match rank");
  std::int64_t scale = 1;
  for (const auto& x : v) scale = std::lcm(scale, x.denominator());
  IntVec iv;
  for (const auto& x : v) iv.push_back(x.numerator() * (scale / x.denominator()));
  std::set<RatVec> out;
  for (const auto& p : weyl_orbit_int(sys, iv, cap)) {
    RatVec r;
    for (auto x : p) r.emplace_back(x, scale);
    out.insert(std::move(r));
  }
  return out;
}

bool is_dominant(const RootSystem& sys, const RatVec& v) {
  const RatVec labels = sys.to_labels(v);
  for (const auto& x : labels)
    if (x < 0) return false;
  return true;
}

RatVec dominant_representative(const RootSystem& sys, const RatVec& v, WeylElement* word) {
  RatVec cur = v;
  std::vector<int> applied;
  while (true) {
    const RatVec labels = sys.to_labels(cur);
    int neg = -1;
    for (int i = 0; i < sys.rank(); ++i)
      if (labels[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    cur = sys.reflect(neg, cur);
    applied.push_back(neg);
  }
  if (word) word->word.assign(applied.rbegin(), applied.rend());
  return cur;
}

IntVec regular_dominant_point(const RootSystem& sys) {
  const RatVec x = sys.from_labels(RatVec(sys.rank(), Rational(1)));
  std::int64_t scale = 1;
  for (const auto& q : x) scale = std::lcm(scale, q.denominator());
  IntVec out;
  for (const auto& q : x) out.push_back(q.numerator() * (scale / q.denominator()));
  return out;
}

WeylElement longest_element(const RootSystem& sys) {
  RatVec minus_rho = to_rational(regular_dominant_point(sys));
  for (auto& x : minus_rho) x = -x;
  WeylElement w;
  dominant_representative(sys, minus_rho, &w);
  return w;
}

namespace {

std::vector<int> compute_minus_w0(const LieType& t) {
  const RootSystem& sys = shared_root_system(t);
  const WeylElement w0 = longest_element(sys);
  std::vector<int> perm(sys.rank(), -1);
  for (int i = 0; i < sys.rank(); ++i) {
    RatVec image = w0.apply(sys, to_rational(sys.simple_root(i).coeffs));
    for (auto& x : image) x = -x;
    for (int j = 0; j < sys.rank(); ++j) {
      RatVec e(sys.rank(), Rational(0));
      e[j] = 1;
      if (image == e) perm[i] = j;
    }
    if (perm[i] < 0) throw std::logic_error("-w0 does not permute simple roots");
  }
  return perm;
}

}  // namespace

std::vector<int> minus_w0_node_map(const LieType& t) {
  static std::mutex mu;
  static std::map<LieType, std::vector<int>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, compute_minus_w0(t)).first;
  return it->second;
}

}  // namespace lieprop
