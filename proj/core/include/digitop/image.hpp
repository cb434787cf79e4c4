#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "digitop/adjacency.hpp"
#include "digitop/point.hpp"

namespace digitop {

// A digital image: a finite subset of Z^n together with an adjacency
// relation. Immutable after construction; every operation on it is pure,
// so shared images are safe to use from concurrent jobs.
class DigitalImage {
 public:
  static constexpr int kMaxDimension = 8;
  static constexpr std::size_t kMaxPoints = 1'000'000;

  // Points are deduplicated-checked and stored in lexicographic order.
  // Throws std::invalid_argument on dimension mismatch, duplicates,
  // an adjacency invalid for the dimension, or cap violations.
  DigitalImage(int dimension, std::vector<Point> points, Adjacency adjacency);

  int dimension() const { return dimension_; }
  const std::vector<Point>& points() const { return points_; }
  const Adjacency& adjacency() const { return adjacency_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const Point& point(int index) const { return points_[index]; }
  bool contains(const Point& p) const;
  // Index in lexicographic order, or -1 when absent.
  int index_of(const Point& p) const;

  bool adjacent(const Point& a, const Point& b) const;
  bool adjacent(int i, int j) const;
  bool adjacent_or_equal(int i, int j) const;

  std::vector<int> neighbor_indices(int i) const;

  bool operator==(const DigitalImage& other) const;

 private:
  int dimension_;
  std::vector<Point> points_;
  Adjacency adjacency_;
};

using ImagePtr = std::shared_ptr<const DigitalImage>;

inline ImagePtr share(DigitalImage img) {
  return std::make_shared<const DigitalImage>(std::move(img));
}

// Points of X adjacent to x under X's adjacency, in lexicographic order.
// Throws std::invalid_argument when x is not in X.
std::vector<Point> neighbors(const DigitalImage& X, const Point& x);

// True iff every pair of points is joined by a path of adjacent steps.
// Throws std::invalid_argument on an empty image.
bool is_connected(const DigitalImage& X);

// A shortest path x = p_0 <-> ... <-> p_k = y, or nullopt when x and y lie in
// different components. Ties are broken by the lexicographically least
// successor at each step. Throws when an endpoint is not in X.
std::optional<std::vector<Point>> find_path(const DigitalImage& X,
                                            const Point& x, const Point& y);

// Bd(S) for a point set S in Z^n: members having a c_1-neighbor of Z^n
// outside S. The ambient relation is always c_1, independent of any image
// adjacency.
std::vector<Point> boundary(int dimension, const std::vector<Point>& pts);
std::vector<Point> boundary(const DigitalImage& X);

// Grid product of intervals [0, extents[j]] with c_n adjacency by default.
// Throws on a negative extent.
DigitalImage rectangle(const std::vector<std::int64_t>& extents);
DigitalImage rectangle(const std::vector<std::int64_t>& extents, Adjacency adjacency);

// Cartesian product carrying normal-product adjacency over the factor
// adjacencies. Requires >= 2 non-empty factors.
DigitalImage product(const std::vector<DigitalImage>& factors);

// The i-th factor (0-based) of a normal-product image: projected point set
// with the factor's own adjacency. Throws when X does not carry a
// normal-product adjacency or i is out of range.
DigitalImage projection(const DigitalImage& X, int i);
Point project_point(const DigitalImage& X, const Point& p, int i);

}  // namespace digitop
