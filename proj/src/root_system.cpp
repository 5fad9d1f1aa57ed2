#include "lieprop/root_system.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lieprop {

bool RootVector::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool RootVector::is_negative() const { return (-*this).is_positive(); }

int RootVector::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

RootVector RootVector::operator-() const {
  RootVector r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

RootVector RootVector::operator+(const RootVector& other) const {
  RootVector r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += other.coeffs[i];
  return r;
}

RootSystem::RootSystem(const LieType& type) : type_(type) {
  type_.validate();
  const int n = type_.rank;
  gram_ = simple_root_gram(type_);
  cartan_.assign(n, std::vector<int>(n));
  form_.assign(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
      form_[i][j] = gram_[i][j];
    }
  form_inverse_ = inverse(form_);

  // Upward chain closure: beta + alpha_i is a root iff q > 0 in the
  // alpha_i-string through beta, with q = p - <beta, alpha_i^vee>.
  std::vector<std::vector<RootVector>> by_height(1);
  for (int i = 0; i < n; ++i) {
    RootVector s{std::vector<int>(n, 0)};
    s.coeffs[i] = 1;
    by_height[0].push_back(s);
    index_[s] = 0;
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::vector<RootVector> next;
    for (const auto& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        RootVector down = beta;
        int p = 0;
        while (true) {
          down.coeffs[i] -= 1;
          if (!index_.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += beta.coeffs[j] * cartan_[j][i];
        const int q = p - pair;
        if (q <= 0) continue;
        RootVector up = beta;
        up.coeffs[i] += 1;
        if (index_.count(up)) continue;
        index_[up] = 0;
        next.push_back(up);
      }
    }
    if (!next.empty()) by_height.push_back(std::move(next));
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end());
    positive_.insert(positive_.end(), level.begin(), level.end());
  }
  highest_ = by_height.back().front();
  if (by_height.back().size() != 1)
    throw std::logic_error("root system " + to_string(type_) + " has no unique highest root");

  roots_ = positive_;
  for (const auto& r : positive_) roots_.push_back(-r);
  index_.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = k;
}

RootVector RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple root index " + std::to_string(i) + " out of range");
  RootVector s{std::vector<int>(rank(), 0)};
  s.coeffs[i] = 1;
  return s;
}

bool RootSystem::is_root(const RootVector& v) const { return index_.count(v) > 0; }

std::optional<std::size_t> RootSystem::index_of(const RootVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::pairing(const RootVector& a, const RootVector& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    if (a.coeffs[i])
      for (int j = 0; j < rank(); ++j) s += a.coeffs[i] * gram_[i][j] * b.coeffs[j];
  return s;
}

Rational RootSystem::pairing(const RatVec& a, const RatVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    if (a[i] != 0)
      for (int j = 0; j < rank(); ++j) s += a[i] * form_[i][j] * b[j];
  return s;
}

RatVec RootSystem::reflect(int i, const RatVec& v) const {
  Rational c = 0;
  for (int j = 0; j < rank(); ++j) c += v[j] * gram_[j][i];
  c = 2 * c / gram_[i][i];
  RatVec out = v;
  out[i] -= c;
  return out;
}

IntVec RootSystem::reflect(int i, const IntVec& v) const {
  std::int64_t c = 0;
  for (int j = 0; j < rank(); ++j) c += v[j] * cartan_[j][i];
  IntVec out = v;
  out[i] -= c;
  return out;
}

RatVec RootSystem::from_labels(const RatVec& labels) const { return mul(form_inverse_, labels); }

RatVec RootSystem::to_labels(const RatVec& v) const { return mul(form_, v); }

const RootSystem& shared_root_system(const LieType& type) {
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

RatVec apply_reflection(const RootSystem& sys, int i, const RatVec& v) {
  if (i < 0 || i >= sys.rank())
    throw std::out_of_range("reflection index " + std::to_string(i) + " out of range for " + to_string(sys.type()));
  if (static_cast<int>(v.size()) != sys.rank()) throw std::invalid_argument("vector length does not match rank");
  return sys.reflect(i, v);
}

ExtendedDiagram extended_diagram(const RootSystem& sys) {
  ExtendedDiagram d;
  d.nodes.push_back(-sys.highest_root());
  for (int i = 0; i < sys.rank(); ++i) d.nodes.push_back(sys.simple_root(i));
  const std::size_t m = d.nodes.size();
  d.bonds.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const int bij = sys.pairing(d.nodes[i], d.nodes[j]);
      const int ii = sys.pairing(d.nodes[i], d.nodes[i]);
      const int jj = sys.pairing(d.nodes[j], d.nodes[j]);
      d.bonds[i][j] = (2 * bij / jj) * (2 * bij / ii);
    }
  return d;
}

}  // namespace lieprop
