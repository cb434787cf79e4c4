#pragma once

#include <memory>
#include <string>
#include <vector>

#include "digitop/point.hpp"

namespace digitop {

// x and y are c_u-adjacent when x != y, their coordinates differ by exactly 1
// in at most u indices, and agree in every other index.
// Throws std::invalid_argument on dimension mismatch or u outside [1, n].
bool cu_adjacent(const Point& x, const Point& y, int u);

// Adjacency relation carried by a digital image: either c_u, or the normal
// product of factor adjacencies (distinct points are adjacent when every
// factor projection pair is equal or adjacent in its factor relation).
class Adjacency {
 public:
  enum class Kind { CU, NormalProduct };

  static Adjacency cu(int u);
  // factor_dims[i] is the coordinate-block width of factor i; factors may
  // themselves be normal products.
  static Adjacency normal_product(std::vector<Adjacency> factors,
                                  std::vector<int> factor_dims);

  Kind kind() const { return kind_; }
  int u() const;                                  // CU only
  const std::vector<Adjacency>& factors() const;  // NormalProduct only
  const std::vector<int>& factor_dims() const;    // NormalProduct only
  int arity() const;                              // NormalProduct only

  // Total coordinate width for a NormalProduct; 0 for CU (any n >= u fits).
  int product_dimension() const;

  // Checks the relation is usable on points of dimension n (u <= n for CU,
  // factor dims summing to n for products). Throws std::invalid_argument.
  void validate_for_dimension(int n) const;

  // Pure relation tests; points must have a dimension this relation was
  // validated for. Symmetric and irreflexive by construction.
  bool adjacent(const Point& a, const Point& b) const;
  bool adjacent_or_equal(const Point& a, const Point& b) const;

  std::string describe() const;  // "c2" or "np(c1,c1)"

  bool operator==(const Adjacency& other) const;

 private:
  Adjacency() = default;

  Kind kind_ = Kind::CU;
  int u_ = 1;
  std::vector<Adjacency> factors_;
  std::vector<int> factor_dims_;
};

}  // namespace digitop
