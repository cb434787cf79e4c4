#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

// A total function X -> X stored as an index table in the domain's canonical
// (lexicographic) point order.
class SelfMap {
 public:
  SelfMap(ImagePtr domain, std::vector<int> table);

  static SelfMap identity(ImagePtr domain);
  static SelfMap constant(ImagePtr domain, const Point& value);
  static SelfMap from_pairs(ImagePtr domain,
                            const std::vector<std::pair<Point, Point>>& pairs);

  const DigitalImage& domain() const { return *domain_; }
  const ImagePtr& domain_ptr() const { return domain_; }
  std::size_t size() const { return table_.size(); }

  int apply_index(int i) const { return table_[i]; }
  const Point& apply(const Point& x) const;
  const std::vector<int>& table() const { return table_; }

  bool is_identity() const;

  bool operator==(const SelfMap& other) const;

  std::string describe() const;  // "(x)->(y), ..." one-line form

 private:
  ImagePtr domain_;
  std::vector<int> table_;
};

// A total function between two images, index table in source order.
class ImageMap {
 public:
  ImageMap(ImagePtr source, ImagePtr target, std::vector<int> table);

  static ImageMap from_pairs(ImagePtr source, ImagePtr target,
                             const std::vector<std::pair<Point, Point>>& pairs);
  // Builds x -> transform(x); every transformed point must land in target.
  template <typename Fn>
  static ImageMap from_function(ImagePtr source, ImagePtr target, Fn&& transform) {
    std::vector<int> table;
    table.reserve(source->size());
    for (const Point& p : source->points()) {
      const int j = target->index_of(transform(p));
      if (j < 0) {
        throw std::invalid_argument("ImageMap: image point outside target");
      }
      table.push_back(j);
    }
    return ImageMap(std::move(source), std::move(target), std::move(table));
  }

  const DigitalImage& source() const { return *source_; }
  const DigitalImage& target() const { return *target_; }
  const ImagePtr& source_ptr() const { return source_; }
  const ImagePtr& target_ptr() const { return target_; }

  int apply_index(int i) const { return table_[i]; }
  const Point& apply(const Point& x) const;
  const std::vector<int>& table() const { return table_; }

 private:
  ImagePtr source_;
  ImagePtr target_;
  std::vector<int> table_;
};

// Digital continuity via the adjacency characterization: every adjacent pair
// maps to an adjacent-or-equal pair.
bool is_continuous(const SelfMap& f);
bool is_continuous(const ImageMap& f);

// { x : f(x) = x }, lexicographic order.
std::vector<Point> fixed_points(const SelfMap& f);

// Pointwise composition x -> f(g(x)). Domains must match.
SelfMap compose(const SelfMap& f, const SelfMap& g);

// Orbit of x under f. On a finite image every orbit enters a cycle; a
// 1-cycle is an eventually fixed orbit with `eventual` its value and `steps`
// the least n with f^n(x) = eventual.
struct OrbitResult {
  bool eventually_fixed;
  Point eventual;        // fixed value, or an arbitrary cycle member
  int steps;             // least n reaching the fixed value (when fixed)
  int cycle_length;      // 1 when eventually fixed
};

// cap must be >= |X| so cycle detection is guaranteed; throws otherwise.
OrbitResult iterate_orbit(const SelfMap& f, const Point& x, int cap);

// Continuous bijection with continuous inverse.
bool is_isomorphism(const ImageMap& F);

// r is a retraction onto Xprime: continuous, range inside Xprime, fixing
// Xprime pointwise. Throws when Xprime is not a subset of the domain.
bool is_retraction(const SelfMap& r, const std::vector<Point>& Xprime);

bool is_onto(const SelfMap& f);

// Visits every one of the |X|^|X| self-maps in lexicographic table order.
// Return false from the visitor to stop early; the function then returns
// false. Intended for tiny images; exhaustive sweeps guard their own sizes.
bool visit_all_self_maps(ImagePtr X, const std::function<bool(const SelfMap&)>& fn);

}  // namespace digitop
