#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "digitop/image.hpp"

namespace digitop {

using Rational = boost::multiprecision::cpp_rational;

// Outcome of a distance comparison. Exact distance kinds never produce
// Indeterminate; floating-point kinds report Indeterminate for any
// comparison that lands inside the tolerance band, so a verdict can flag
// itself instead of silently resolving a float tie.
enum class Cmp { Less, Equal, Greater, Indeterminate };

constexpr double kFloatTolerance = 1e-9;

// A distance value that stays exact whenever the metric allows it:
//   Int      -- l1 and shortest-path distances (integers)
//   SqrtInt  -- l2 distances (square roots of integers)
//   Real     -- general lp distances (double, tolerance-guarded comparisons)
class Dist {
 public:
  enum class Kind { Int, SqrtInt, Real };

  static Dist integer(std::int64_t n);
  static Dist sqrt_int(std::int64_t n);  // value = sqrt(n)
  static Dist real(double v);

  Kind kind() const { return kind_; }
  std::int64_t raw() const { return raw_; }  // Int: n, SqrtInt: n under the root
  double value() const;                      // double approximation
  bool is_zero() const;                      // exact for all kinds (lattice points)

  // Squared value as an exact rational; only for exact kinds.
  Rational squared() const;

  friend Cmp compare(const Dist& a, const Dist& b);

 private:
  Kind kind_ = Kind::Int;
  std::int64_t raw_ = 0;
  double real_ = 0.0;
};

Cmp compare(const Dist& a, const Dist& b);

// a <= q * b and a < q * b with rational q >= 0, exact on exact kinds.
Cmp compare_scaled(const Dist& a, const Rational& q, const Dist& b);
bool leq_scaled(const Dist& a, const Rational& q, const Dist& b);

// d(x,y) = (sum |x_i - y_i|^p)^(1/p); p = 1 and p = 2 produce exact kinds.
// Throws on p <= 0 or dimension mismatch.
Dist lp_distance(const Point& x, const Point& y, double p);

// Distance oracle over an image: an lp metric, or the shortest-path metric
// backed by an all-pairs table (defined only for connected images).
class Metric {
 public:
  static Metric lp(double p);
  static Metric shortest_path(ImagePtr X);  // throws when X is disconnected

  bool is_lp() const { return !table_; }
  bool is_shortest_path() const { return static_cast<bool>(table_); }
  double p() const { return p_; }
  // Exact-by-kind metrics: l1, l2, shortest-path.
  bool exact() const;

  // Shortest-path metrics require both points in the backing image and throw
  // otherwise; lp metrics only require matching dimensions.
  Dist distance(const Point& x, const Point& y) const;

  // Table lookup by image index (shortest-path only).
  int path_length(int i, int j) const;
  const DigitalImage& domain() const;  // shortest-path only

  std::string selector() const;  // "lp:1", "lp:2.5", "spath"
  // Parses a selector; "spath" needs the image the table is built over.
  static Metric from_selector(const std::string& s, ImagePtr for_spath);

 private:
  Metric() = default;
  double p_ = 2.0;
  ImagePtr image_;
  std::shared_ptr<const std::vector<std::vector<int>>> table_;
};

// Spec-facing constructor name for the all-pairs table metric.
Metric build_shortest_path_metric(ImagePtr X);

// max over pairs; singleton -> 0. Throws on an empty image.
Dist diameter(const DigitalImage& X, const Metric& d);

// min over distinct pairs: the uniform-discreteness witness. Throws when
// |X| < 2.
Dist min_positive_distance(const DigitalImage& X, const Metric& d);

// Verdict on a finite sequence prefix. Never extrapolates: constancy is
// claimed only when the prefix itself shows a stabilized tail, and a
// one-element prefix (empty tail) is Inconclusive.
struct SequenceVerdict {
  enum class Status { EventuallyConstant, NotConstantWithinPrefix, Inconclusive };
  Status status;
  std::optional<std::size_t> index;  // first stabilized position, if constant
};

SequenceVerdict analyze_sequence(const std::vector<Point>& prefix, const Metric& d);

std::string to_string(SequenceVerdict::Status s);

}  // namespace digitop
