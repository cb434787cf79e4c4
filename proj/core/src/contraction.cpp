#include "digitop/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "digitop/enumerate.hpp"

namespace digitop {

namespace {

double to_double(const Rational& r) { return static_cast<double>(r); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << '/' << boost::multiprecision::denominator(r);
  }
  return os.str();
}

}  // namespace

Coeff Coeff::exact_ratio(Rational r) {
  Coeff c;
  c.exact_ = true;
  c.sqrt_ = false;
  c.rat_ = std::move(r);
  return c;
}

Coeff Coeff::exact_sqrt(Rational r) {
  if (r < 0) throw std::invalid_argument("Coeff::exact_sqrt: negative radicand");
  // A perfect-square rational collapses to a plain ratio.
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  const auto ns = boost::multiprecision::sqrt(num);
  const auto ds = boost::multiprecision::sqrt(den);
  if (ns * ns == num && ds * ds == den) {
    return exact_ratio(Rational(ns, ds));
  }
  Coeff c;
  c.exact_ = true;
  c.sqrt_ = true;
  c.rat_ = std::move(r);
  return c;
}

Coeff Coeff::approx(double v) {
  Coeff c;
  c.exact_ = false;
  c.approx_ = v;
  return c;
}

double Coeff::value() const {
  if (!exact_) return approx_;
  const double r = to_double(rat_);
  return sqrt_ ? std::sqrt(r) : r;
}

Cmp Coeff::compare_to_one() const {
  if (exact_) {
    // sqrt(r) ? 1 is r ? 1 as well.
    if (rat_ < 1) return Cmp::Less;
    if (rat_ > 1) return Cmp::Greater;
    return Cmp::Equal;
  }
  if (std::abs(approx_ - 1.0) <= kFloatTolerance) {
    return approx_ == 1.0 ? Cmp::Equal : Cmp::Indeterminate;
  }
  return approx_ < 1.0 ? Cmp::Less : Cmp::Greater;
}

bool Coeff::less_than(const Coeff& other) const {
  if (exact_ && other.exact_) {
    if (sqrt_ == other.sqrt_) return rat_ < other.rat_;
    // compare squares: value^2 is rat_ when sqrt, rat_^2 otherwise
    const Rational a = sqrt_ ? rat_ : rat_ * rat_;
    const Rational b = other.sqrt_ ? other.rat_ : other.rat_ * other.rat_;
    return a < b;
  }
  return value() < other.value();
}

std::string Coeff::str() const {
  if (exact_ && !sqrt_) return rational_str(rat_);
  if (exact_) return "sqrt(" + rational_str(rat_) + ")";
  std::ostringstream os;
  os << approx_;
  return os.str();
}

// ---------------------------------------------------------------------------
// contraction coefficients

namespace {

// Exact ratio of two distances of the same metric, as a Coeff.
// num may be zero (exact kinds only mix as Int(0) vs SqrtInt).
Coeff ratio_coeff(const Dist& num, const Dist& den, bool& indeterminate) {
  if (num.kind() != Dist::Kind::Real && den.kind() != Dist::Kind::Real) {
    if (num.is_zero()) return Coeff::exact_ratio(Rational(0));
    const bool num_sqrt = num.kind() == Dist::Kind::SqrtInt;
    const bool den_sqrt = den.kind() == Dist::Kind::SqrtInt;
    if (!num_sqrt && !den_sqrt) {
      return Coeff::exact_ratio(Rational(num.raw(), den.raw()));
    }
    // value = sqrt(num^2 / den^2)
    return Coeff::exact_sqrt(num.squared() / den.squared());
  }
  const double d = den.value();
  if (d <= kFloatTolerance) indeterminate = true;
  return Coeff::approx(num.value() / d);
}

void fold_ratio(ContractionReport& rep, Coeff candidate, const Point& x,
                const Point& y) {
  if (!rep.witness_pair) {
    rep.best_coefficient = candidate;
    rep.witness_pair = {x, y};
    return;
  }
  if (rep.best_coefficient->less_than(candidate)) {
    rep.best_coefficient = std::move(candidate);
    rep.witness_pair = {x, y};
  }
}

void settle_satisfaction(ContractionReport& rep) {
  if (!rep.best_coefficient) {  // no pairs at all (singleton): q* = 0
    rep.best_coefficient = Coeff::exact_ratio(Rational(0));
    rep.satisfied = true;
    return;
  }
  switch (rep.best_coefficient->compare_to_one()) {
    case Cmp::Less: rep.satisfied = true; break;
    case Cmp::Indeterminate:
      rep.satisfied = false;
      rep.indeterminate = true;
      break;
    default: rep.satisfied = false;
  }
}

}  // namespace

ContractionReport digital_contraction_coefficient(const SelfMap& S, const Metric& d) {
  const DigitalImage& X = S.domain();
  ContractionReport rep;
  rep.class_name = "contraction";
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point& x = X.point(i);
      const Point& y = X.point(j);
      const Dist num = d.distance(X.point(S.apply_index(i)), X.point(S.apply_index(j)));
      const Dist den = d.distance(x, y);
      fold_ratio(rep, ratio_coeff(num, den, rep.indeterminate), x, y);
    }
  }
  settle_satisfaction(rep);
  return rep;
}

ContractionReport is_quasi_contraction(const SelfMap& S, const Metric& d) {
  const DigitalImage& X = S.domain();
  ContractionReport rep;
  rep.class_name = "quasi";
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point& x = X.point(i);
      const Point& y = X.point(j);
      const Point& sx = X.point(S.apply_index(i));
      const Point& sy = X.point(S.apply_index(j));
      const Dist num = d.distance(sx, sy);
      // 5-term Ciric maximum; positive for distinct x, y since it dominates
      // d(x,y).
      Dist m = d.distance(x, y);
      for (const Dist& t : {d.distance(x, sx), d.distance(y, sy),
                            d.distance(x, sy), d.distance(y, sx)}) {
        if (compare(t, m) == Cmp::Greater) m = t;
      }
      fold_ratio(rep, ratio_coeff(num, m, rep.indeterminate), x, y);
    }
  }
  settle_satisfaction(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// theta-contractions

double FunctionTable::at(double t) const {
  for (const auto& [s, v] : samples) {
    if (s == t) return v;
  }
  throw std::invalid_argument("FunctionTable::at: t not on the sampled spectrum");
}

ThetaReport admits_theta_contraction(const SelfMap& T, const Metric& d) {
  const DigitalImage& X = T.domain();
  const int n = static_cast<int>(X.size());
  ThetaReport rep;

  const bool exact = d.exact();
  struct Spread {
    Dist t;                    // realized distance
    Dist worst;                // max image distance over pairs at spread t
    std::pair<Point, Point> worst_pair;
  };
  // key: squared distance as rational (exact) or the double value
  std::map<Rational, Spread> exact_spreads;
  std::map<double, Spread> real_spreads;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Dist t = d.distance(X.point(i), X.point(j));
      const Dist img = d.distance(X.point(T.apply_index(i)), X.point(T.apply_index(j)));
      auto update = [&](Spread& s) {
        if (compare(img, s.worst) == Cmp::Greater) {
          s.worst = img;
          s.worst_pair = {X.point(i), X.point(j)};
        }
      };
      if (exact) {
        auto [it, fresh] = exact_spreads.try_emplace(
            t.squared(), Spread{t, img, {X.point(i), X.point(j)}});
        if (!fresh) update(it->second);
      } else {
        auto [it, fresh] = real_spreads.try_emplace(
            t.value(), Spread{t, img, {X.point(i), X.point(j)}});
        if (!fresh) update(it->second);
      }
    }
  }

  // Monotone envelope over ascending spreads; admits iff the envelope stays
  // strictly under sqrt(t) everywhere.
  rep.admits = true;
  FunctionTable table;
  Dist envelope = Dist::integer(0);
  std::pair<Point, Point> envelope_pair;
  auto step = [&](const Spread& s) {
    if (compare(s.worst, envelope) == Cmp::Greater) {
      envelope = s.worst;
      envelope_pair = s.worst_pair;
    }
    bool ok;
    if (exact) {
      // envelope < sqrt(t)  <=>  envelope^4 < t^2 (all non-negative)
      const Rational e2 = envelope.squared();
      ok = e2 * e2 < s.t.squared();
    } else {
      const double lhs = envelope.value();
      const double rhs = std::sqrt(s.t.value());
      if (std::abs(lhs - rhs) <= kFloatTolerance) {
        rep.indeterminate = true;
        ok = false;
      } else {
        ok = lhs < rhs;
      }
    }
    if (!ok && rep.admits) {
      rep.admits = false;
      rep.failing_pair = envelope_pair;
    }
    const double tv = s.t.value();
    table.samples.emplace_back(tv, std::max(envelope.value(), std::sqrt(tv) / 2.0));
  };
  for (const auto& [k, s] : exact_spreads) step(s);
  for (const auto& [k, s] : real_spreads) step(s);

  if (rep.admits) rep.witness_theta = std::move(table);
  return rep;
}

// ---------------------------------------------------------------------------
// domination and constant forcing

bool check_dominated_pair(const SelfMap& f, const SelfMap& g, const Metric& d) {
  if (!(f.domain() == g.domain())) {
    throw std::invalid_argument("check_dominated_pair: domain mismatch");
  }
  const DigitalImage& X = f.domain();
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Dist df = d.distance(X.point(f.apply_index(i)), X.point(f.apply_index(j)));
      const Dist dg = d.distance(X.point(g.apply_index(i)), X.point(g.apply_index(j)));
      if (compare(df, dg) != Cmp::Less) return false;
    }
  }
  return true;
}

namespace {

void require_constant_forcing_hypotheses(const DigitalImage& X, const Metric& d) {
  if (!is_connected(X)) {
    throw std::invalid_argument("verify_constant_forcing: image not connected");
  }
  if (d.is_shortest_path()) {
    if (!(d.domain() == X)) {
      throw std::invalid_argument(
          "verify_constant_forcing: shortest-path metric not built over X");
    }
    return;
  }
  if (X.adjacency().kind() != Adjacency::Kind::CU || X.adjacency().u() != 1) {
    throw std::invalid_argument(
        "verify_constant_forcing: lp metric requires c_1 adjacency");
  }
}

}  // namespace

ConstantForcingReport verify_constant_forcing(ImagePtr X, const Metric& d,
                                              std::uint64_t budget) {
  require_constant_forcing_hypotheses(*X, d);
  ConstantForcingReport rep;

  // Structural certificate, mirroring the proof: adjacent pairs sit at
  // distance exactly 1, and 1 is the minimum positive distance, so strict
  // domination under a continuous g forces equality across every edge and
  // connectedness spreads it.
  const int n = static_cast<int>(X->size());
  bool edges_ok = true;
  for (int i = 0; i < n && edges_ok; ++i) {
    for (int j : X->neighbor_indices(i)) {
      if (j <= i) continue;
      ++rep.adjacent_pairs_checked;
      if (compare(d.distance(X->point(i), X->point(j)), Dist::integer(1)) !=
          Cmp::Equal) {
        edges_ok = false;
        break;
      }
    }
  }
  bool min_ok = true;
  if (n >= 2) {
    min_ok = compare(min_positive_distance(*X, d), Dist::integer(1)) != Cmp::Less;
  }
  rep.confirmed = edges_ok && min_ok;

  // Exhaustive falsification sweep at desk scale.
  if (n <= 4) {
    rep.sweep_ran = true;
    std::vector<SelfMap> continuous_maps;
    EnumerationConstraints c;
    c.require_continuous = true;
    c.node_budget = budget;
    const EnumerationResult er = enumerate_maps(X, c, [&](const SelfMap& g) {
      continuous_maps.push_back(g);
      return true;
    });
    if (er.status != EnumerationStatus::Complete) {
      throw BudgetExceededError("verify_constant_forcing: enumeration budget spent");
    }
    visit_all_self_maps(X, [&](const SelfMap& f) {
      const std::vector<int>& t = f.table();
      const bool constant =
          std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; });
      for (const SelfMap& g : continuous_maps) {
        ++rep.sweep_pairs;
        if (check_dominated_pair(f, g, d) && !constant) ++rep.violations;
      }
      return true;
    });
    rep.confirmed = rep.confirmed && rep.violations == 0;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// constructive common fixed point

CommonFixedPointResult rani_common_fixed_point(const SelfMap& f, const SelfMap& g,
                                               const Metric& d, const Rational& q) {
  if (!(f.domain() == g.domain())) {
    throw std::invalid_argument("rani_common_fixed_point: domain mismatch");
  }
  if (!(q > 0 && q < 1)) {
    throw std::invalid_argument("hypothesis failure: q must satisfy 0 < q < 1");
  }
  const DigitalImage& X = f.domain();
  const int n = static_cast<int>(X.size());

  // f(X) inside g(X)
  std::vector<char> in_g_range(n, 0);
  for (int i = 0; i < n; ++i) in_g_range[g.apply_index(i)] = 1;
  for (int i = 0; i < n; ++i) {
    if (!in_g_range[f.apply_index(i)]) {
      throw std::invalid_argument("hypothesis failure: f(X) not inside g(X)");
    }
  }
  // d(fx, fy) <= q d(gx, gy) for all pairs
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Dist df = d.distance(X.point(f.apply_index(i)), X.point(f.apply_index(j)));
      const Dist dg = d.distance(X.point(g.apply_index(i)), X.point(g.apply_index(j)));
      const Cmp c = compare_scaled(df, q, dg);
      if (c == Cmp::Greater) {
        throw std::invalid_argument(
            "hypothesis failure: d(fx,fy) <= q d(gx,gy) fails at a pair");
      }
      if (c == Cmp::Indeterminate) {
        throw std::invalid_argument(
            "hypothesis failure: inexact metric comparison is indeterminate");
      }
    }
  }
  // commuting
  for (int i = 0; i < n; ++i) {
    if (f.apply_index(g.apply_index(i)) != g.apply_index(f.apply_index(i))) {
      throw std::invalid_argument("hypothesis failure: f and g do not commute");
    }
  }
  // Uniform discreteness is automatic on a finite image.

  // g-preimage chain: f x_k = g x_{k+1}, least preimage each time.
  std::vector<int> least_g_preimage(n, -1);
  for (int i = n - 1; i >= 0; --i) least_g_preimage[g.apply_index(i)] = i;

  CommonFixedPointResult out;
  int cur = 0;  // lexicographically least point
  out.trace.push_back(X.point(cur));
  // The image-value distances contract by q each step through a finite
  // positive spectrum, so stabilization is guaranteed; the cap is a guard
  // against a broken hypothesis check, not a tunable.
  const int hard_cap = 1'000'000;
  for (int iter = 0; iter < hard_cap; ++iter) {
    const int next = least_g_preimage[f.apply_index(cur)];
    out.trace.push_back(X.point(next));
    const Dist step = d.distance(X.point(f.apply_index(cur)), X.point(f.apply_index(next)));
    if (step.is_zero()) {
      const int z = f.apply_index(cur);
      if (f.apply_index(z) != z || g.apply_index(z) != z) {
        throw std::logic_error("rani_common_fixed_point: stabilized value not fixed");
      }
      // Independent uniqueness scan.
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (f.apply_index(i) == i && g.apply_index(i) == i) ++count;
      }
      if (count != 1) {
        throw std::logic_error("rani_common_fixed_point: fixed point not unique");
      }
      out.point = X.point(z);
      return out;
    }
    cur = next;
  }
  throw std::logic_error("rani_common_fixed_point: chain failed to stabilize");
}

// ---------------------------------------------------------------------------
// expansive-pair inequalities

const char* const kTiwariVariant4PrintedForm =
    "d(T1x,T2y) >= alpha[d(x,y)+d(x,T1x)+d(y,T2y)] + [beta d(x,T2y) + d(y,T1x)]";

namespace {

struct SideValue {
  bool exact = true;
  Rational e{0};
  double v = 0.0;

  void add(const Rational& coeff, const Dist& t) {
    if (exact && t.kind() == Dist::Kind::Int) {
      e += coeff * t.raw();
    } else {
      if (exact) {
        v = to_double(e);
        exact = false;
      }
    }
    if (!exact) v += to_double(coeff) * t.value();
  }
};

bool geq(const SideValue& lhs, const SideValue& rhs) {
  if (lhs.exact && rhs.exact) return lhs.e >= rhs.e;
  const double a = lhs.exact ? to_double(lhs.e) : lhs.v;
  const double b = rhs.exact ? to_double(rhs.e) : rhs.v;
  if (std::abs(a - b) <= kFloatTolerance) return true;  // ties satisfy >=
  return a > b;
}

Dist dist_max(std::initializer_list<Dist> ts) {
  Dist best = Dist::integer(0);
  bool first = true;
  for (const Dist& t : ts) {
    if (first || compare(t, best) == Cmp::Greater) {
      best = t;
      first = false;
    }
  }
  return best;
}

}  // namespace

bool tiwari_inequality_holds(const SelfMap& T1, const SelfMap& T2, const Metric& d,
                             const TiwariParams& p, int variant) {
  if (!(T1.domain() == T2.domain())) {
    throw std::invalid_argument("tiwari_inequality_holds: domain mismatch");
  }
  if (variant < 1 || variant > 5) {
    throw std::invalid_argument("tiwari_inequality_holds: variant must be 1..5");
  }
  const DigitalImage& X = T1.domain();
  const int n = static_cast<int>(X.size());
  const Rational one(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point& x = X.point(i);
      const Point& y = X.point(j);
      const Point& t1x = X.point(T1.apply_index(i));
      const Point& t2y = X.point(T2.apply_index(j));
      const Dist lhs_d = d.distance(t1x, t2y);
      const Dist dxy = d.distance(x, y);
      const Dist dxt1x = d.distance(x, t1x);
      const Dist dyt2y = d.distance(y, t2y);
      const Dist dxt2y = d.distance(x, t2y);
      const Dist dyt1x = d.distance(y, t1x);

      SideValue lhs;
      lhs.add(one, lhs_d);
      SideValue rhs;
      switch (variant) {
        case 1:
          rhs.add(p.alpha, dxy);
          rhs.add(p.beta, dxt1x);
          rhs.add(p.beta, dyt2y);
          break;
        case 2:
          rhs.add(p.alpha, dxy);
          rhs.add(p.beta, dxt2y);
          rhs.add(p.beta, dyt1x);
          break;
        case 3:
          rhs.add(p.alpha, dxy);
          rhs.add(p.beta, dxt1x);
          rhs.add(p.gamma, dyt2y);
          rhs.add(p.eta, dxt1x);
          rhs.add(p.eta, dyt2y);
          break;
        case 4:
          rhs.add(p.alpha, dxy);
          rhs.add(p.alpha, dxt1x);
          rhs.add(p.alpha, dyt2y);
          rhs.add(p.beta, dxt2y);
          rhs.add(p.beta, dyt1x);
          break;
        case 5:
          rhs.add(p.alpha, dist_max({dxy, dxt1x, dyt2y}));
          rhs.add(p.beta, dist_max({dxt2y, dxy}));
          rhs.add(p.gamma, dxy);
          break;
      }
      if (!geq(lhs, rhs)) return false;
    }
  }
  return true;
}

TrivializationReport tiwari_trivialization_check(ImagePtr X, const Metric& d,
                                                 int variant, const TiwariParams& p,
                                                 std::uint64_t budget) {
  if (!(p.alpha > 0 && p.beta > 0 && p.gamma > 0 && p.eta > 0)) {
    throw std::invalid_argument(
        "tiwari_trivialization_check: all four constants must be positive");
  }
  const int n = static_cast<int>(X->size());
  if (n > 5) {
    throw std::invalid_argument(
        "tiwari_trivialization_check: exhaustive sweep intended for |X| <= 5");
  }
  TrivializationReport rep;
  rep.alpha_above_one = p.alpha > 1;

  // Onto self-maps of a finite set are exactly the permutations.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<SelfMap> onto_maps;
  do {
    onto_maps.emplace_back(X, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  bool budget_ok = true;
  visit_all_self_maps(X, [&](const SelfMap& t1) {
    for (const SelfMap& t2 : onto_maps) {
      if (++rep.pairs_swept > budget) {
        budget_ok = false;
        return false;
      }
      if (tiwari_inequality_holds(t1, t2, d, p, variant)) {
        ++rep.satisfying_pairs;
        if (!(t1.is_identity() && t2.is_identity())) {
          rep.all_satisfying_are_identity = false;
        }
      }
    }
    return true;
  });
  if (!budget_ok) {
    throw BudgetExceededError("tiwari_trivialization_check: budget exhausted");
  }
  rep.conclusion_holds = rep.alpha_above_one && n >= 2
                             ? rep.satisfying_pairs == 0
                             : rep.all_satisfying_are_identity;
  return rep;
}

QuasiOrbitReport quasi_orbit_theorem_check(ImagePtr X, std::uint64_t budget) {
  if (!is_connected(*X)) {
    throw std::invalid_argument("quasi_orbit_theorem_check: image not connected");
  }
  const Metric d = Metric::shortest_path(X);
  const int n = static_cast<int>(X->size());
  QuasiOrbitReport rep;
  bool budget_ok = true;
  visit_all_self_maps(X, [&](const SelfMap& S) {
    if (++rep.maps_swept > budget) {
      budget_ok = false;
      return false;
    }
    if (!is_quasi_contraction(S, d).satisfied) return true;
    ++rep.quasi_contractions;
    // All orbits must stabilize at one common value, the unique fixed point.
    bool ok = true;
    std::optional<Point> u;
    for (int i = 0; i < n && ok; ++i) {
      const OrbitResult orbit = iterate_orbit(S, X->point(i), n);
      if (!orbit.eventually_fixed) {
        ok = false;
      } else if (!u) {
        u = orbit.eventual;
      } else if (*u != orbit.eventual) {
        ok = false;
      }
    }
    if (ok) {
      const std::vector<Point> fix = fixed_points(S);
      ok = fix.size() == 1 && u && fix[0] == *u;
    }
    if (!ok) ++rep.violations;
    return true;
  });
  if (!budget_ok) {
    throw BudgetExceededError("quasi_orbit_theorem_check: budget exhausted");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// printed six-term maximum and weight tables

double m_of(const Point& x, const Point& y, const SelfMap& S, const SelfMap& T,
            const SelfMap& A, const SelfMap& B, const Metric& d) {
  const Point& sx = S.apply(x);
  const Point& ty = T.apply(y);
  const Point& ax = A.apply(x);
  const Point& by = B.apply(y);
  const double terms[6] = {
      d.distance(sx, ty).value(),
      d.distance(by, sx).value(),
      d.distance(sx, ax).value(),
      d.distance(by, ty).value(),
      d.distance(ax, ty).value(),
      2.0 * d.distance(sx, ax).value() / (1.0 + d.distance(by, ty).value()),
  };
  return *std::max_element(std::begin(terms), std::end(terms));
}

PairWeightTable::PairWeightTable(ImagePtr domain, std::vector<double> weights)
    : domain_(std::move(domain)), weights_(std::move(weights)) {
  if (!domain_) throw std::invalid_argument("PairWeightTable: null domain");
  const std::size_t n = domain_->size();
  if (weights_.size() != n * n) {
    throw std::invalid_argument("PairWeightTable: table not total on X x X");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("PairWeightTable: negative weight");
  }
}

PairWeightTable PairWeightTable::constant(ImagePtr domain, double w) {
  const std::size_t n = domain->size();
  return PairWeightTable(std::move(domain), std::vector<double>(n * n, w));
}

double PairWeightTable::at(int i, int j) const {
  return weights_[static_cast<std::size_t>(i) * domain_->size() + j];
}

double PairWeightTable::at(const Point& x, const Point& y) const {
  const int i = domain_->index_of(x);
  const int j = domain_->index_of(y);
  if (i < 0 || j < 0) throw std::invalid_argument("PairWeightTable::at: point outside domain");
  return at(i, j);
}

void PairWeightTable::set(const Point& x, const Point& y, double w) {
  const int i = domain_->index_of(x);
  const int j = domain_->index_of(y);
  if (i < 0 || j < 0) throw std::invalid_argument("PairWeightTable::set: point outside domain");
  if (!(w >= 0.0)) throw std::invalid_argument("PairWeightTable::set: negative weight");
  weights_[static_cast<std::size_t>(i) * domain_->size() + j] = w;
}

bool is_alpha_admissible(const SelfMap& T, const PairWeightTable& w) {
  if (!(T.domain() == w.domain())) {
    throw std::invalid_argument("is_alpha_admissible: domain mismatch");
  }
  const int n = static_cast<int>(T.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (w.at(i, j) >= 1.0 && w.at(T.apply_index(i), T.apply_index(j)) < 1.0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace digitop
