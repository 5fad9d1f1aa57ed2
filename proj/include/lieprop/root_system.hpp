#pragma once

// Finite root systems in simple-root coordinates.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lieprop/lie_type.hpp"
#include "lieprop/linalg.hpp"

namespace lieprop {

/// Integer coordinates of a root in the basis of simple roots.
struct RootVector {
  std::vector<int> coeffs;

  bool is_positive() const;
  bool is_negative() const;
  int height() const;
  RootVector operator-() const;
  RootVector operator+(const RootVector& other) const;
  auto operator<=>(const RootVector&) const = default;
};

/// Integer Cartan matrix; entry (i,j) is <alpha_i, alpha_j^vee>.
using CartanMatrix = std::vector<std::vector<int>>;

class RootSystem {
 public:
  explicit RootSystem(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives, in the same order.
  const std::vector<RootVector>& roots() const { return roots_; }
  const RootVector& highest_root() const { return highest_; }
  const RatMat& bilinear_form() const { return form_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  RootVector simple_root(int i) const;
  bool is_root(const RootVector& v) const;
  /// Index into roots(), or nullopt.
  std::optional<std::size_t> index_of(const RootVector& v) const;

  int pairing(const RootVector& a, const RootVector& b) const;
  Rational pairing(const RatVec& a, const RatVec& b) const;

  /// v - <v, alpha_i^vee> alpha_i in simple-root coordinates.
  RatVec reflect(int i, const RatVec& v) const;
  IntVec reflect(int i, const IntVec& v) const;

  /// Coordinates x with (x, alpha_i) = labels[i]; converts Dynkin labels to
  /// simple-root coordinates.
  RatVec from_labels(const RatVec& labels) const;
  RatVec to_labels(const RatVec& v) const;

 private:
  LieType type_;
  std::vector<std::vector<int>> gram_;
  CartanMatrix cartan_;
  RatMat form_;
  RatMat form_inverse_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> roots_;
  std::map<RootVector, std::size_t> index_;
  RootVector highest_;
};

/// Process-wide immutable instance per type; safe to call concurrently.
const RootSystem& shared_root_system(const LieType& type);

/// Errors on out-of-range node index.
RatVec apply_reflection(const RootSystem& sys, int i, const RatVec& v);

/// The affine-extended diagram: node 0 is minus the highest root, nodes
/// 1..rank are the simple roots.
struct ExtendedDiagram {
  std::vector<RootVector> nodes;
  /// bonds[i][j] = <b_i, b_j^vee> * <b_j, b_i^vee>; nonzero means adjacent.
  std::vector<std::vector<int>> bonds;

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && bonds[i][j] != 0; }
};

ExtendedDiagram extended_diagram(const RootSystem& sys);

}  // namespace lieprop
