#pragma once

// Exact rational linear algebra over small dense matrices.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 defines int == rational in terms of rational == int, and the
// C++20 reversed candidates turn that into unbounded recursion. Exact
// non-template overloads win overload resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace lieprop {

using Rational = boost::rational<std::int64_t>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<std::int64_t>;

std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);

RatVec to_rational(const IntVec& v);
RatVec to_rational(const std::vector<int>& v);

bool is_zero(const RatVec& v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

/// Basis of {x : m x = 0}. `cols` is needed when m has no rows.
RatMat nullspace(const RatMat& m, std::size_t cols);

RatMat transpose(const RatMat& m);

/// Inverse of a square nonsingular matrix; throws std::domain_error when singular.
RatMat inverse(const RatMat& m);

RatVec mul(const RatMat& m, const RatVec& v);

/// Rows that span the annihilator of span(rows): x lies in span(rows) iff
/// every returned row has zero dot product with x.
RatMat annihilator(const RatMat& rows, std::size_t dim);

/// Dimension of span(a) ∩ span(b).
std::size_t intersection_dim(const RatMat& a, const RatMat& b);

/// Clears denominators: returns the primitive integer vector on the same ray.
IntVec primitive_integer(const RatVec& v);

}  // namespace lieprop
