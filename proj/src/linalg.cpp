#include "lieprop/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lieprop {

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << q.numerator();
  if (q.denominator() != 1) out << '/' << q.denominator();
  return out.str();
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s + ")";
}

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

RatVec to_rational(const std::vector<int>& v) {
  RatVec out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

RatMat nullspace(const RatMat& m, std::size_t cols) {
  RatMat work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatMat inverse(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) throw std::domain_error("inverse: singular matrix");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVec mul(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

RatMat annihilator(const RatMat& rows, std::size_t dim) { return nullspace(rows, dim); }

std::size_t intersection_dim(const RatMat& a, const RatMat& b) {
  RatMat both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = a.empty() ? 0 : rank(a);
  const std::size_t rb = b.empty() ? 0 : rank(b);
  const std::size_t rs = both.empty() ? 0 : rank(both);
  return ra + rb - rs;
}

IntVec primitive_integer(const RatVec& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.denominator());
  IntVec out;
  out.reserve(v.size());
  std::int64_t g = 0;
  for (const auto& x : v) {
    const std::int64_t n = x.numerator() * (l / x.denominator());
    out.push_back(n);
    g = std::gcd(g, n < 0 ? -n : n);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace lieprop
