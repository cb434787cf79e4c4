#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digitop/metric.hpp"
#include "digitop/selfmap.hpp"

namespace digitop {

// Best contraction-type coefficient of a map, kept exact on l1/l2/shortest-
// path metrics: a plain rational for integer-valued metrics, the square root
// of a rational for l2, a tolerance-guarded double otherwise.
class Coeff {
 public:
  static Coeff exact_ratio(Rational r);
  static Coeff exact_sqrt(Rational r);  // value = sqrt(r)
  static Coeff approx(double v);

  bool exact() const { return exact_; }
  bool is_sqrt() const { return sqrt_; }
  const Rational& ratio() const { return rat_; }  // squared when is_sqrt()
  double value() const;

  Cmp compare_to_one() const;
  bool less_than(const Coeff& other) const;  // strict; approx falls back to doubles

  std::string str() const;  // "1/2", "sqrt(1/2)", or decimal

 private:
  bool exact_ = true;
  bool sqrt_ = false;
  Rational rat_{0};
  double approx_ = 0.0;
};

struct ContractionReport {
  std::string class_name;
  bool satisfied = false;
  // Set when a float comparison fell inside the tolerance band; exact
  // metrics (l1, l2, shortest-path) never set it.
  bool indeterminate = false;
  std::optional<Coeff> best_coefficient;               // q*
  std::optional<std::pair<Point, Point>> witness_pair;  // attains the ratio
};

// q* = max over x != y of d(Sx,Sy)/d(x,y); satisfied iff q* < 1.
ContractionReport digital_contraction_coefficient(const SelfMap& S, const Metric& d);

// q* against the 5-term maximum M(x,y) = max{d(x,y), d(x,Sx), d(y,Sy),
// d(x,Sy), d(y,Sx)}; pairs with M = 0 contribute nothing.
ContractionReport is_quasi_contraction(const SelfMap& S, const Metric& d);

// Sampled nonneg function on the realized distance spectrum, t strictly
// increasing.
struct FunctionTable {
  std::vector<std::pair<double, double>> samples;
  double at(double t) const;  // exact sample lookup; throws off-spectrum
};

// Decides whether some increasing theta with theta(0)=0 and 0<theta(t)<sqrt(t)
// dominates T, i.e. d(Tx,Ty) <= theta(d(x,y)) everywhere. Procedure: over the
// realized positive distances t_1 < ... < t_k, let m_i be the worst image
// distance at spread t_i and M_i its running maximum; a dominating theta
// exists iff M_i < sqrt(t_i) for every i, because monotonicity forces
// theta(t_i) >= M_i and nothing else binds. The emitted witness table is
// theta(t_i) = max(M_i, sqrt(t_i)/2).
struct ThetaReport {
  bool admits = false;
  bool indeterminate = false;
  std::optional<FunctionTable> witness_theta;
  std::optional<std::pair<Point, Point>> failing_pair;
};

ThetaReport admits_theta_contraction(const SelfMap& T, const Metric& d);

// Strict domination d(fx,fy) < d(gx,gy) over all distinct pairs. The
// all-pairs phrasing is unsatisfiable at x = y, so equal pairs are excluded;
// only adjacent (hence distinct) pairs carry any force anyway.
bool check_dominated_pair(const SelfMap& f, const SelfMap& g, const Metric& d);

// Certifies the constant-forcing theorem on (X, d): under the shortest-path
// metric, or any lp metric with c_1 adjacency, every f strictly dominated by
// a continuous g is constant. The certificate checks the structural facts
// the proof rests on (adjacent pairs at distance exactly 1, minimum positive
// distance >= 1, connectedness); for |X| <= 4 an exhaustive falsification
// sweep over all (g continuous, f arbitrary) pairs runs as well.
struct ConstantForcingReport {
  bool confirmed = false;
  std::uint64_t adjacent_pairs_checked = 0;
  bool sweep_ran = false;
  std::uint64_t sweep_pairs = 0;
  std::uint64_t violations = 0;
};

ConstantForcingReport verify_constant_forcing(ImagePtr X, const Metric& d,
                                              std::uint64_t budget);

// Constructive common fixed point for a commuting pair with
// d(fx,fy) <= q d(gx,gy), 0 < q < 1, f(X) inside g(X): iterate
// f x_n = g x_{n+1} from the lexicographically least start, choosing the
// lexicographically least g-preimage each step; the chain stabilizes at the
// unique common fixed point. Hypothesis failures throw, identified by name.
struct CommonFixedPointResult {
  Point point;
  std::vector<Point> trace;  // x_0, x_1, ...
};

CommonFixedPointResult rani_common_fixed_point(const SelfMap& f, const SelfMap& g,
                                               const Metric& d, const Rational& q);

struct TiwariParams {
  Rational alpha{0};
  Rational beta{0};
  Rational gamma{0};
  Rational eta{0};
};

// The five expansive-pair inequalities, checked over all pairs (x, y):
//   1: d(T1x,T2y) >= a d(x,y) + b [d(x,T1x) + d(y,T2y)]
//   2: d(T1x,T2y) >= a d(x,y) + b [d(x,T2y) + d(y,T1x)]
//   3: d(T1x,T2y) >= a d(x,y) + b d(x,T1x) + g d(y,T2y) + e [d(x,T1x) + d(y,T2y)]
//   4: d(T1x,T2y) >= a [d(x,y) + d(x,T1x) + d(y,T2y)] + b [d(x,T2y) + d(y,T1x)]
//      (bracket as repaired; the printed form scales only the first summand)
//   5: d(T1x,T2y) >= a max{d(x,y), d(x,T1x), d(y,T2y)} + b max{d(x,T2y), d(x,y)}
//      + g d(x,y)
bool tiwari_inequality_holds(const SelfMap& T1, const SelfMap& T2, const Metric& d,
                             const TiwariParams& p, int variant);

// Raw printed form of variant 4, recorded for transparency next to the
// repaired reading implemented above.
extern const char* const kTiwariVariant4PrintedForm;

// Sweeps all (T1, T2) with T2 onto; with all four constants positive, every
// satisfying pair must be (id, id), and with alpha > 1 on |X| >= 2 no pair
// may satisfy the inequality at all.
struct TrivializationReport {
  std::uint64_t pairs_swept = 0;
  std::uint64_t satisfying_pairs = 0;
  bool all_satisfying_are_identity = true;
  bool alpha_above_one = false;
  bool conclusion_holds = false;
};

TrivializationReport tiwari_trivialization_check(ImagePtr X, const Metric& d,
                                                 int variant, const TiwariParams& p,
                                                 std::uint64_t budget);

// For every quasi-contraction S among all |X|^|X| self-maps of a connected X
// under the shortest-path metric: all orbits stabilize at one common value u
// and u is the unique fixed point of S.
struct QuasiOrbitReport {
  std::uint64_t maps_swept = 0;
  std::uint64_t quasi_contractions = 0;
  std::uint64_t violations = 0;
};

QuasiOrbitReport quasi_orbit_theorem_check(ImagePtr X, std::uint64_t budget);

// The printed six-term maximum
//   max{ d(Sx,Ty), d(By,Sx), d(Sx,Ax), d(By,Ty), d(Ax,Ty),
//        2 d(Sx,Ax) / (1 + d(By,Ty)) }.
double m_of(const Point& x, const Point& y, const SelfMap& S, const SelfMap& T,
            const SelfMap& A, const SelfMap& B, const Metric& d);

// Total weight table on X x X.
class PairWeightTable {
 public:
  PairWeightTable(ImagePtr domain, std::vector<double> weights);  // row-major
  static PairWeightTable constant(ImagePtr domain, double w);

  const DigitalImage& domain() const { return *domain_; }
  double at(int i, int j) const;
  double at(const Point& x, const Point& y) const;
  void set(const Point& x, const Point& y, double w);

 private:
  ImagePtr domain_;
  std::vector<double> weights_;
};

// w(x,y) >= 1 implies w(Tx,Ty) >= 1, over all pairs.
bool is_alpha_admissible(const SelfMap& T, const PairWeightTable& w);

}  // namespace digitop
