#pragma once

#include <optional>
#include <vector>

#include "digitop/metric.hpp"
#include "digitop/selfmap.hpp"

namespace digitop {

// Compatibility notions for a pair of self-maps on a finite image. Every
// qualifying sequence (S x_n and T x_n both converging to the same t) is
// eventually inside a coincidence fiber {x : Sx = Tx = t}, because a finite
// digital metric space is uniformly discrete and convergent sequences are
// eventually constant. The sequence-based definitions therefore reduce to
// conditions over coincidence points, which is how they are computed here;
// the three computed flags provably coincide and the report fails loudly if
// they ever disagree.
struct CompatibilityReport {
  bool weakly_compatible = false;
  bool compatible = false;
  bool type_A = false;
  bool type_P = false;
  bool occasionally_weakly_compatible = false;
  // True when no coincidence point exists: compatible and weakly_compatible
  // hold vacuously while occasionally_weakly_compatible is false for lack of
  // an existential witness.
  bool vacuous = false;
  std::vector<Point> coincidence_points;
  // A coincidence point x and the common value t = Sx = Tx at which the
  // compatibility condition S(t) = T(t) fails.
  std::optional<std::pair<Point, Point>> failing_witness;
};

// { x : S(x) = T(x) }, lexicographic.
std::vector<Point> coincidence_points(const SelfMap& S, const SelfMap& T);

// Commutation at every coincidence point; witness is a failing point.
struct WeakCompatibilityResult {
  bool value = false;
  std::optional<Point> witness;
};

WeakCompatibilityResult is_weakly_compatible(const SelfMap& S, const SelfMap& T);

CompatibilityReport compatibility_report(const SelfMap& S, const SelfMap& T,
                                         const Metric& d);

// Validates that the prefix witnesses lim S x_n = lim T x_n = t (both
// composed tails constant and equal), then checks the compatible-pair
// conclusion: S T x_n stabilizes at T(t) and T S x_n at S(t).
struct LimitCheckResult {
  bool holds = false;
  bool pair_compatible = false;         // conclusion is only guaranteed when true
  std::optional<std::size_t> witness_index;  // first failing tail position
};

LimitCheckResult compat_limit_check(const SelfMap& S, const SelfMap& T,
                                    const std::vector<Point>& prefix,
                                    const Metric& d);

}  // namespace digitop
