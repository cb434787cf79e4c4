#include "digitop/compat.hpp"

#include <stdexcept>

namespace digitop {

std::vector<Point> coincidence_points(const SelfMap& S, const SelfMap& T) {
  if (!(S.domain() == T.domain())) {
    throw std::invalid_argument("coincidence_points: domain mismatch");
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S.apply_index(static_cast<int>(i)) == T.apply_index(static_cast<int>(i))) {
      out.push_back(S.domain().point(static_cast<int>(i)));
    }
  }
  return out;
}

WeakCompatibilityResult is_weakly_compatible(const SelfMap& S, const SelfMap& T) {
  WeakCompatibilityResult r;
  r.value = true;
  for (const Point& x : coincidence_points(S, T)) {
    if (S.apply(T.apply(x)) != T.apply(S.apply(x))) {
      r.value = false;
      r.witness = x;
      return r;
    }
  }
  return r;
}

CompatibilityReport compatibility_report(const SelfMap& S, const SelfMap& T,
                                         const Metric& d) {
  CompatibilityReport rep;
  rep.coincidence_points = coincidence_points(S, T);
  rep.weakly_compatible = is_weakly_compatible(S, T).value;

  if (rep.coincidence_points.empty()) {
    // No qualifying sequence exists, so the sequence-based notions hold
    // vacuously; the existential one does not.
    rep.vacuous = true;
    rep.compatible = rep.type_A = rep.type_P = true;
    rep.occasionally_weakly_compatible = false;
    return rep;
  }

  rep.compatible = rep.type_A = rep.type_P = true;
  for (const Point& x : rep.coincidence_points) {
    const Point& sx = S.apply(x);
    const Point& tx = T.apply(x);
    // Each flag evaluates its own defining composite expressions on the
    // fiber; on a finite image the limits reduce to these values.
    const bool compat_here = d.distance(S.apply(tx), T.apply(sx)).is_zero();
    const bool type_a_here = d.distance(S.apply(tx), T.apply(tx)).is_zero() &&
                             d.distance(T.apply(sx), S.apply(sx)).is_zero();
    const bool type_p_here = d.distance(S.apply(sx), T.apply(tx)).is_zero();
    if (!compat_here && !rep.failing_witness) rep.failing_witness = {x, sx};
    rep.compatible = rep.compatible && compat_here;
    rep.type_A = rep.type_A && type_a_here;
    rep.type_P = rep.type_P && type_p_here;
    if (S.apply(tx) == T.apply(sx)) rep.occasionally_weakly_compatible = true;
  }

  if (rep.compatible != rep.type_A || rep.compatible != rep.type_P) {
    throw std::logic_error(
        "compatibility_report: finite-space equivalence violated "
        "(compatible/type A/type P disagree)");
  }
  return rep;
}

LimitCheckResult compat_limit_check(const SelfMap& S, const SelfMap& T,
                                    const std::vector<Point>& prefix,
                                    const Metric& d) {
  if (prefix.empty()) {
    throw std::invalid_argument("compat_limit_check: empty prefix");
  }
  if (!(S.domain() == T.domain())) {
    throw std::invalid_argument("compat_limit_check: domain mismatch");
  }
  for (const Point& p : prefix) {
    if (!S.domain().contains(p)) {
      throw std::invalid_argument("compat_limit_check: prefix point outside domain");
    }
  }

  // Hypothesis: some tail has S x_k = T x_k = t throughout.
  const std::size_t n = prefix.size();
  std::size_t m = n;
  const Point* t = nullptr;
  {
    const Point& s_last = S.apply(prefix[n - 1]);
    if (s_last == T.apply(prefix[n - 1])) {
      t = &s_last;
      m = n - 1;
      while (m > 0 && S.apply(prefix[m - 1]) == *t && T.apply(prefix[m - 1]) == *t) {
        --m;
      }
    }
  }
  if (t == nullptr) {
    throw std::invalid_argument(
        "compat_limit_check: prefix does not witness lim Sx_n = lim Tx_n = t");
  }

  LimitCheckResult out;
  out.pair_compatible = compatibility_report(S, T, d).compatible;
  const Point tt = T.apply(*t);
  const Point st = S.apply(*t);
  out.holds = true;
  for (std::size_t k = m; k < n; ++k) {
    const bool ok = S.apply(T.apply(prefix[k])) == tt &&
                    T.apply(S.apply(prefix[k])) == st;
    if (!ok) {
      out.holds = false;
      out.witness_index = k;
      break;
    }
  }
  return out;
}

}  // namespace digitop
