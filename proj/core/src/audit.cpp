#include "digitop/audit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "digitop/compat.hpp"
#include "digitop/contraction.hpp"
#include "digitop/freezing.hpp"
#include "digitop/metric.hpp"

namespace digitop {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Unproven: return "UNPROVEN";
    case Verdict::Trivializes: return "TRIVIALIZES";
    case Verdict::Duplicate: return "DUPLICATE";
  }
  return "?";
}

std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::Counterexample: return "COUNTEREXAMPLE";
    case EvidenceKind::Sweep: return "SWEEP";
    case EvidenceKind::GapDemo: return "GAP_DEMO";
    case EvidenceKind::DocOnly: return "DOC_ONLY";
  }
  return "?";
}

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Confirmed: return "CONFIRMED";
    case AuditStatus::Failed: return "FAILED";
    case AuditStatus::SkippedDocOnly: return "SKIPPED_DOC_ONLY";
  }
  return "?";
}

namespace {

using Checks = std::vector<AuditCheck>;

AuditCheck check(std::string name, bool pass, std::string detail) {
  return AuditCheck{std::move(name), pass, std::move(detail)};
}

ImagePtr interval(std::int64_t a, std::int64_t b) {
  std::vector<Point> pts;
  for (std::int64_t v = a; v <= b; ++v) pts.push_back(Point{v});
  return share(DigitalImage(1, std::move(pts), Adjacency::cu(1)));
}

bool map_is_constant(const SelfMap& f) {
  const auto& t = f.table();
  return std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; });
}

// --------------------------------------------------------------------------
// counterexamples on bounded prefixes of N

// A(x) = x+1, B(x) = 2, gamma(t) = t/2 on the prefix [1, N] of N with
// d(x,y) = |x-y|: the contraction-style hypotheses hold, gamma is shrinking,
// and A has no fixed point anywhere.
Checks sug31_checks(int N) {
  Checks out;
  const auto A = [](std::int64_t x) { return x + 1; };
  const auto B = [](std::int64_t) { return std::int64_t{2}; };
  std::set<std::int64_t> a_image;
  for (std::int64_t x = 1; x <= N; ++x) a_image.insert(A(x));
  bool range_ok = true;  // B values land in A's image
  bool shrink_ok = true; // d(Bx, By) = 0 <= gamma(d(Ax, Ay))
  bool gamma_ok = true;  // gamma(a) < a for realized a > 0
  bool no_fix = true;    // A(x) != x
  for (std::int64_t x = 1; x <= N; ++x) {
    if (!a_image.count(B(x))) range_ok = false;
    if (A(x) == x) no_fix = false;
    for (std::int64_t y = x + 1; y <= N; ++y) {
      const Rational dA = std::abs(A(x) - A(y));
      const Rational dB = std::abs(B(x) - B(y));
      const Rational gamma = dA / 2;
      if (!(dB <= gamma)) shrink_ok = false;
      if (dA > 0 && !(gamma < dA)) gamma_ok = false;
    }
  }
  out.push_back(check("B-range-in-A-image", range_ok,
                      "B([1,N]) = {2} lies in A([1,N]) = [2,N+1]"));
  out.push_back(check("d(Bx,By) <= gamma(d(Ax,Ay))", shrink_ok,
                      "left side is identically 0"));
  out.push_back(check("gamma(a) < a for a > 0", gamma_ok, "gamma(t) = t/2"));
  out.push_back(check("A has no fixed point", no_fix,
                      "A(x) = x+1 != x on [1," + std::to_string(N) +
                          "]; the remainder of N is unchecked but x+1 = x is "
                          "impossible"));
  return out;
}

// The printed example's four maps A(x)=x+1, B(y)=y+1, S(x)=x-1, T(y)=y-1
// have no fixed points at all, so no common fixed point exists.
Checks sugex32_checks(int N) {
  bool none_fixed = true;
  for (int x = 1; x <= N; ++x) {
    if (x + 1 == x || x - 1 == x) none_fixed = false;
  }
  return {check("no map has a fixed point", none_fixed,
                "x+1 != x and x-1 != x on [1," + std::to_string(N) +
                    "]; a common fixed point cannot exist")};
}

// Shared gap demonstration: a strictly decreasing positive sequence need not
// be eventually constant, and its terms need not approach 0. The sequence
// a_n = 1 + 1/n is checked exactly on a prefix.
Checks decreasing_gap_checks(int N) {
  bool decreasing = true, positive = true, never_repeats = true, above_one = true;
  Rational prev = 0;
  for (int n = 1; n <= N; ++n) {
    const Rational a = Rational(1) + Rational(1, n);
    if (n > 1) {
      if (!(a < prev)) decreasing = false;
      if (a == prev) never_repeats = false;
    }
    if (!(a > 0)) positive = false;
    if (!(a > 1)) above_one = false;
    prev = a;
  }
  Checks out;
  out.push_back(check("a_n = 1 + 1/n strictly decreases", decreasing, ""));
  out.push_back(check("a_n stays positive", positive, ""));
  out.push_back(check("a_n is never eventually constant on the prefix",
                      never_repeats, "consecutive terms always differ"));
  out.push_back(check(
      "a_n does not approach 0", above_one,
      "every term exceeds 1, so 'strictly decreasing' licenses neither "
      "'distances reach 0' nor 'eventually constant'"));
  return out;
}

// --------------------------------------------------------------------------
// constancy sweeps

AuditCheck constancy_sweep(const std::string& name, ImagePtr X, const Metric& d,
                           bool theta_class) {
  std::uint64_t in_class = 0, violations = 0, swept = 0;
  visit_all_self_maps(X, [&](const SelfMap& f) {
    ++swept;
    const bool sat = theta_class ? admits_theta_contraction(f, d).admits
                                 : digital_contraction_coefficient(f, d).satisfied;
    if (sat) {
      ++in_class;
      if (!map_is_constant(f)) ++violations;
    }
    return true;
  });
  std::ostringstream detail;
  detail << swept << " maps swept, " << in_class
         << " in class, every one constant";
  return check(name, violations == 0 && in_class > 0, detail.str());
}

Checks gh_c31_checks() {
  ImagePtr X = interval(0, 2);
  return {constancy_sweep("every shortest-path contraction is constant", X,
                          Metric::shortest_path(X), /*theta_class=*/false)};
}

Checks theta_constancy_checks() {
  ImagePtr X = interval(0, 2);
  return {
      constancy_sweep("every theta-contraction is constant (shortest path)", X,
                      Metric::shortest_path(X), /*theta_class=*/true),
      constancy_sweep("every theta-contraction is constant (l1, c_1)", X,
                      Metric::lp(1), /*theta_class=*/true),
  };
}

Checks gh34_checks(std::uint64_t budget) {
  const QuasiOrbitReport r = quasi_orbit_theorem_check(interval(0, 2), budget);
  std::ostringstream detail;
  detail << r.maps_swept << " maps swept, " << r.quasi_contractions
         << " quasi-contractions, every orbit stabilized at the unique fixed "
            "point";
  return {check("quasi-contraction orbits collapse",
                r.violations == 0 && r.quasi_contractions > 0, detail.str())};
}

// --------------------------------------------------------------------------
// commuting-pair construction and its trivialization

Checks rani_checks(std::uint64_t budget) {
  Checks out;
  // Constructive run on a hypothesis-satisfying instance.
  {
    ImagePtr X = interval(0, 3);
    const Metric d = Metric::lp(1);
    const SelfMap g = SelfMap::identity(X);
    const SelfMap f = SelfMap::constant(X, Point{2});
    const CommonFixedPointResult r =
        rani_common_fixed_point(f, g, d, Rational(1, 2));
    int common = 0;
    for (std::int64_t v = 0; v <= 3; ++v) {
      const Point p{v};
      if (f.apply(p) == p && g.apply(p) == p) ++common;
    }
    out.push_back(check(
        "constructive chain reaches the unique common fixed point",
        r.point == Point{2} && common == 1,
        "f constant at 2, g identity on [0,3], q = 1/2; chain returned " +
            to_string(r.point)));
  }
  // Trivialization sweep: with c_1 adjacency and the l1 metric, any f
  // dominated by a continuous g at some q < 1 is constant.
  {
    ImagePtr X = interval(0, 2);
    const Metric d = Metric::lp(1);
    std::vector<SelfMap> continuous_maps;
    EnumerationConstraints c;
    c.require_continuous = true;
    c.node_budget = budget;
    enumerate_maps(X, c, [&](const SelfMap& g) {
      continuous_maps.push_back(g);
      return true;
    });
    std::uint64_t feasible = 0, violations = 0, pairs = 0;
    visit_all_self_maps(X, [&](const SelfMap& f) {
      for (const SelfMap& g : continuous_maps) {
        ++pairs;
        // Feasible iff some q < 1 works: zero g-spread forces zero f-spread,
        // and the worst ratio must stay below 1.
        bool feasible_here = true;
        Rational worst(0);
        const int n = static_cast<int>(X->size());
        for (int i = 0; i < n && feasible_here; ++i) {
          for (int j = i + 1; j < n; ++j) {
            const auto df = d.distance(X->point(f.apply_index(i)),
                                       X->point(f.apply_index(j)));
            const auto dg = d.distance(X->point(g.apply_index(i)),
                                       X->point(g.apply_index(j)));
            if (dg.is_zero()) {
              if (!df.is_zero()) {
                feasible_here = false;
                break;
              }
              continue;
            }
            worst = std::max(worst, Rational(df.raw(), dg.raw()));
          }
        }
        if (feasible_here && worst < 1) {
          ++feasible;
          if (!map_is_constant(f)) ++violations;
        }
      }
      return true;
    });
    std::ostringstream detail;
    detail << pairs << " (f, continuous g) pairs swept, " << feasible
           << " admit some q < 1, all with f constant";
    out.push_back(check("domination by a continuous map forces constancy",
                        violations == 0 && feasible > 0, detail.str()));
  }
  return out;
}

// --------------------------------------------------------------------------
// unique coincidence value vs the alleged fixed-point equations

Checks sj215_checks() {
  ImagePtr X = interval(0, 2);
  std::uint64_t pairs_with_unique_value = 0, equation_failures = 0;
  std::string witness;
  visit_all_self_maps(X, [&](const SelfMap& J) {
    visit_all_self_maps(X, [&](const SelfMap& K) {
      std::set<int> values;
      int sigma = -1;
      for (int i = 0; i < 3; ++i) {
        if (J.apply_index(i) == K.apply_index(i)) {
          values.insert(J.apply_index(i));
          if (sigma < 0) sigma = i;
        }
      }
      if (values.size() != 1) return true;
      ++pairs_with_unique_value;
      const int eta = *values.begin();
      // Alleged without justification: J(sigma) = J(K(sigma)) and
      // K(J(sigma)) = K(sigma), i.e. J(eta) = eta and K(eta) = eta.
      if (J.apply_index(eta) != eta || K.apply_index(eta) != eta) {
        ++equation_failures;
        if (witness.empty()) {
          std::ostringstream os;
          os << "J: " << J.describe() << "; K: " << K.describe()
             << "; unique coincidence value eta = "
             << to_string(X->point(eta)) << " at sigma = "
             << to_string(X->point(sigma)) << ", but J(eta) = "
             << to_string(X->point(J.apply_index(eta))) << ", K(eta) = "
             << to_string(X->point(K.apply_index(eta)));
          witness = os.str();
        }
      }
      return true;
    });
    return true;
  });
  std::ostringstream detail;
  detail << equation_failures << " of " << pairs_with_unique_value
         << " unique-coincidence pairs break the alleged equations; first: "
         << witness;
  return {check("alleged coincidence equations do not follow",
                equation_failures > 0, detail.str())};
}

// --------------------------------------------------------------------------
// alpha-admissibility gap

Checks sug32_checks() {
  Checks out;
  ImagePtr X = interval(0, 2);
  const SelfMap id = SelfMap::identity(X);
  const PairWeightTable zero = PairWeightTable::constant(X, 0.0);
  bool admissible = is_alpha_admissible(id, zero);
  bool all_below_one = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (zero.at(i, j) >= 1.0) all_below_one = false;
    }
  }
  out.push_back(check(
      "alpha-admissible does not imply alpha >= 1",
      admissible && all_below_one,
      "alpha identically 0 is vacuously admissible yet below 1 everywhere, so "
      "the argument's opening inference is invalid"));
  const Metric d = Metric::lp(1);
  const double m = m_of(Point{0}, Point{2}, id, id, id, id, d);
  out.push_back(check("printed six-term maximum evaluates as stated", m == 2.0,
                      "all four maps the identity, x = 0, y = 2: M(x,y) = 2"));
  return out;
}

// --------------------------------------------------------------------------
// expansive-pair records

TiwariParams tiwari_audit_params(int variant) {
  TiwariParams p;
  switch (variant) {
    case 1: p = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}; break;
    case 2: p = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}; break;
    case 3: p = {Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(1, 4)}; break;
    case 4: p = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}; break;
    case 5: p = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}; break;
    default: throw std::logic_error("bad variant");
  }
  return p;
}

Checks tiwari_sweep_checks(int variant, std::uint64_t budget) {
  Checks out;
  const Metric d = Metric::lp(1);
  {
    const TrivializationReport r = tiwari_trivialization_check(
        interval(0, 2), d, variant, tiwari_audit_params(variant), budget);
    std::ostringstream detail;
    detail << r.pairs_swept << " pairs swept, " << r.satisfying_pairs
           << " satisfy the inequality, all equal to (id, id)";
    out.push_back(check("positive constants force the identity pair",
                        r.conclusion_holds, detail.str()));
  }
  {
    TiwariParams p = tiwari_audit_params(variant);
    p.alpha = Rational(2);
    const TrivializationReport r =
        tiwari_trivialization_check(interval(0, 1), d, variant, p, budget);
    std::ostringstream detail;
    detail << "alpha = 2 on a two-point image: " << r.satisfying_pairs
           << " satisfying pairs";
    out.push_back(check("alpha > 1 admits no pair beyond a singleton",
                        r.conclusion_holds && r.satisfying_pairs == 0,
                        detail.str()));
  }
  return out;
}

// The printed constant constraints admit a negative division coefficient,
// which silently reverses the key inequality step.
Checks tiwari33_gap() {
  const Rational alpha = 1, beta(3, 4), gamma(1, 4), eta(3, 4);
  const bool admissible = alpha >= -1 && beta > 0 && gamma <= Rational(1, 2) &&
                          Rational(1, 2) < eta && eta <= 1 &&
                          alpha + beta + gamma + eta > 1;
  const Rational denom = Rational(1) - (beta + eta);
  return {check(
      "admissible constants make the division step invalid",
      admissible && denom < 0,
      "alpha=1, beta=3/4, gamma=1/4, eta=3/4 meet every printed constraint, "
      "yet 1-(beta+eta) = -1/2 < 0, so dividing the derived inequality by it "
      "reverses its direction")};
}

Checks tiwari34_gap() {
  const Rational alpha(1, 2), beta(3, 4);
  const bool admissible = alpha >= 0 && beta < 1 && alpha + beta > 1;
  const Rational denom = Rational(1) - (alpha + beta);
  return {check(
      "admissible constants make the division step invalid",
      admissible && denom < 0,
      "alpha=1/2, beta=3/4 meet the printed constraints, yet 1-(alpha+beta) = "
      "-1/4 < 0, so the claimed ratio bound does not follow")};
}

// The claimed induction only controls steps whose smaller index is odd; a
// sequence shrinking on odd steps and flat on even ones defeats the claimed
// h^(2n) bound.
Checks tiwari35_gap() {
  const Rational h(2, 3);  // 1/(alpha+beta+gamma) for alpha=beta=gamma=1/2
  std::vector<Rational> dist;
  dist.push_back(1);
  for (int k = 1; k <= 12; ++k) {
    // odd step shrinks by h, even step repeats
    if (k % 2 == 1) {
      dist.push_back(dist.back() * h);
    } else {
      dist.push_back(dist.back());
    }
  }
  bool odd_recurrence = true;
  for (std::size_t n = 0; 2 * n + 1 < dist.size(); ++n) {
    if (!(dist[2 * n + 1] <= h * dist[2 * n])) odd_recurrence = false;
  }
  Rational h_pow(1);
  bool claimed_bound_fails = false;
  for (std::size_t n = 0; 2 * n < dist.size(); ++n) {
    if (dist[2 * n] > h_pow) claimed_bound_fails = true;  // d_{2n} > h^{2n} d_0
    h_pow *= h * h;
  }
  return {check(
      "odd-index recurrence does not yield the claimed geometric bound",
      odd_recurrence && claimed_bound_fails,
      "d = (1, h, h, h^2, h^2, ...) satisfies d_{2n+1} <= h d_{2n} for every n "
      "yet violates d_{2n} <= h^{2n} d_0 already at n = 1 (h = 2/3)")};
}

// --------------------------------------------------------------------------
// freezing-set records

Checks almu25_checks() {
  auto X = share(rectangle({1, 1}, Adjacency::cu(1)));
  const SelfMap f = SelfMap::from_pairs(
      X, {{Point{0, 0}, Point{0, 1}},
          {Point{0, 1}, Point{1, 1}},
          {Point{1, 0}, Point{0, 1}},
          {Point{1, 1}, Point{1, 1}}});
  const Point a{0, 0};
  const Point a2{0, 1};
  const bool continuous = is_continuous(f);
  const bool adjacent = X->adjacent(a, a2);
  // Non-strict hypothesis chain in the first coordinate.
  const bool hypothesis =
      f.apply(a)[0] <= a[0] && a[0] <= a2[0];
  const bool conclusion_fails = !(f.apply(a2)[0] <= a2[0]);
  return {check(
      "non-strict hypotheses break the projection-descent conclusion",
      continuous && adjacent && hypothesis && conclusion_fails,
      "on the c_1 unit square, f = ((0,0)->(0,1), (0,1)->(1,1), (1,0)->(0,1), "
      "(1,1)->(1,1)) satisfies p(f(a)) <= p(a) <= p(a') with a=(0,0), "
      "a'=(0,1), yet p(f(a')) = 1 > 0 = p(a'); as printed (conclusion about "
      "f(a)) the statement is vacuous by transitivity, so only the strict "
      "form has content")};
}

Checks almu26_checks(std::uint64_t budget) {
  ImagePtr X = interval(0, 2);
  const SelfMap id = SelfMap::identity(X);
  const std::vector<Point>& all = X->points();
  const bool retract = is_retraction(id, all);
  const FreezingReport fr = is_freezing_set(X, all, budget);
  return {check(
      "a non-proper retract can contain a freezing set",
      retract && fr.verdict == FreezingReport::Verdict::Freezing,
      "X is a retract of itself via the identity and X itself is a freezing "
      "set, so the claim fails without a properness hypothesis")};
}

// --------------------------------------------------------------------------
// the registry

std::vector<AssertionRecord> build_registry() {
  std::vector<AssertionRecord> r;

  r.push_back({"ALMU-2.4", "AlmuEtAl, Theorem 2.4",
               "Isomorphisms carry freezing sets to freezing sets.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "Duplicates BxFPsets2, Theorem 5.3 (with garbled hypotheses: "
                 "the freezing set is named V but used as A, and the target "
                 "image doubles as the set)."}}});

  r.push_back({"ALMU-2.5", "AlmuEtAl, Theorem 2.5",
               "Projection-descent inequality for continuous self-maps, "
               "printed with non-strict inequalities.",
               Verdict::Refuted, std::nullopt,
               {{EvidenceKind::Counterexample,
                 "As printed the conclusion concerns f(a) and is vacuous by "
                 "transitivity; under the intended descent reading (cf. "
                 "BxFPsets2, Lemma 5.5) the non-strict form fails on the c_1 "
                 "unit square."}}});

  r.push_back({"ALMU-2.6", "AlmuEtAl, Theorem 2.6.i",
               "A retract of U contains no freezing set for U.",
               Verdict::Refuted, std::nullopt,
               {{EvidenceKind::Counterexample,
                 "U is a retract of itself via the identity, and U trivially "
                 "contains freezing sets; the statement needs a properness "
                 "hypothesis (cf. BxFPsets2, Theorem 5.6). Item ii rests on "
                 "reduction points, which are never defined here."}}});

  r.push_back({"ALMU-3.2", "AlmuEtAl, Theorem 3.2",
               "If Bd(A) is a freezing set and lies in Fix(f), then A lies in "
               "Fix(f).",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "Immediate as written (a superset of a freezing set is a "
                 "freezing set, so f = id); subsumed by BxFPsets2, "
                 "Proposition 5.12, which needs no freezing hypothesis."}}});

  r.push_back({"ALMU-3.3", "AlmuEtAl, Theorem 3.3",
               "Bd(U) is a minimal freezing set for a c_n rectangle with all "
               "extents above 1.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "Duplicates BxFPsets2, Theorem 5.17; minimality is asserted "
                 "but never proven in the duplicate."}}});

  r.push_back({"ALMU-3.4", "AlmuEtAl, Theorem 3.4",
               "Projections of a freezing set of a normal product freeze the "
               "factors.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "Duplicates BxFPsets2, Theorem 5.18."}}});

  r.push_back({"DALAL-3.1", "DalalJAM, Theorem 3.1",
               "Four self-maps with compatible pairs and a phi-contractive "
               "bound have a unique common fixed point.",
               Verdict::Unproven, std::nullopt,
               {{EvidenceKind::GapDemo,
                 "The proof concludes Cauchy-ness from d(y_2n, y_2n+1) -> 0; "
                 "the demonstration shows a strictly decreasing positive "
                 "sequence that neither reaches 0 nor stabilizes."}}});

  r.push_back({"GH-3.1", "GayaHema, Theorem 3.1",
               "Cauchy sequences in a digital metric space are eventually "
               "constant.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly, "Duplicates HanBanach, Proposition 3.5."}}});

  r.push_back({"GH-3.2", "GayaHema, Theorem 3.2",
               "Convergent sequences in a digital metric space stabilize at "
               "their limit.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly, "Duplicates HanBanach, Proposition 3.9."}}});

  r.push_back({"GH-3.3", "GayaHema, Theorem 3.3",
               "Digital metric spaces are complete.",
               Verdict::Duplicate, std::nullopt,
               {{EvidenceKind::DocOnly, "Duplicates HanBanach, Theorem 3.11."}}});

  r.push_back({"GH-C3.1", "GayaHema, Corollary 3.1",
               "A digital contraction under the path-length metric has a "
               "unique fixed point.",
               Verdict::Trivializes, std::nullopt,
               {{EvidenceKind::Sweep,
                 "Without connectedness the path-length metric is undefined; "
                 "with it, every such contraction is constant, so the fixed "
                 "point is just the constant value."}}});

  r.push_back({"GH-3.4", "GayaHema, Theorem 3.4",
               "Quasi-contraction orbits converge geometrically to the unique "
               "fixed point.",
               Verdict::Trivializes, std::nullopt,
               {{EvidenceKind::Sweep,
                 "Valid only on connected images; there, uniform discreteness "
                 "collapses the geometric-rate clause into plain eventual "
                 "constancy, verified exhaustively."}}});

  r.push_back({"GUPTA-3.1", "GuptaEtAl, Theorem 3.1",
               "A theta-contraction on a digital metric space has a unique "
               "fixed point.",
               Verdict::Unproven, Verdict::Trivializes,
               {{EvidenceKind::GapDemo,
                 "The proof infers stabilization from a strictly decreasing "
                 "distance sequence without showing it reaches 0."},
                {EvidenceKind::Sweep,
                 "Under the shortest-path metric, or any lp metric with c_1, "
                 "every theta-contraction is constant."}}});

  r.push_back({"RANI-3.1", "Rani, Theorem 3.1",
               "Commuting f, g with f(X) in g(X) and d(fx,fy) <= q d(gx,gy) "
               "have a unique common fixed point.",
               Verdict::Unproven, Verdict::Trivializes,
               {{EvidenceKind::GapDemo,
                 "The printed proof writes d(y_n,y_m) -> 1 where 0 is meant, "
                 "and assumes a continuity hypothesis that uniform "
                 "discreteness makes automatic; the corrected constructive "
                 "chain is executed and lands on the unique common fixed "
                 "point."},
                {EvidenceKind::Sweep,
                 "With c_1 adjacency and the l1 metric, the inequality forces "
                 "f to be constant whenever g is continuous."}}});

  r.push_back({"SJ-2.15", "SalJha, Proposition 2.15",
               "A unique point of coincidence of weakly compatible maps is "
               "their unique common fixed point.",
               Verdict::Unproven, std::nullopt,
               {{EvidenceKind::GapDemo,
                 "The proof asserts J(sigma) = J(K(sigma)) and K(J(sigma)) = "
                 "K(sigma) with no justification; a sweep exhibits pairs with "
                 "a unique coincidence value where both equations fail."}}});

  r.push_back({"SJ-3.1", "SalJha, Theorem 3.1",
               "A 4-term xi-expansion bound with xi < 1/4 yields a unique "
               "common fixed point.",
               Verdict::Unproven, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "The argument leans on SalJha, Proposition 2.15, which is "
                 "unproven; no corrected statement is supplied, so the record "
                 "stops here."}}});

  r.push_back({"SJ-EX-3.2", "SalJha, Example 3.2",
               "Claimed digital metric space on F = [0,1] with J(u) = "
               "1/(1+u).",
               Verdict::Refuted, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "F = [0,1] is not a subset of any Z^n and J is not "
                 "integer-valued, so the example never defines a digital "
                 "image; nothing is executable."}}});

  r.push_back({"SUG-3.1", "Sug, Theorem 3.1",
               "B(X) in A(X) and d(Bx,By) <= gamma(d(Ax,Ay)) with shrinking "
               "gamma force a unique common fixed point.",
               Verdict::Refuted, std::nullopt,
               {{EvidenceKind::Counterexample,
                 "On N with d = |x-y|: A(x) = x+1, B(x) = 2, gamma(t) = t/2 "
                 "meet every hypothesis, yet A has no fixed point."}}});

  r.push_back({"SUG-3.2", "Sug, Theorem 3.2",
               "Occasionally weakly compatible alpha-psi-phi contractive "
               "pairs share a unique fixed point.",
               Verdict::Unproven, std::nullopt,
               {{EvidenceKind::GapDemo,
                 "The argument opens by deriving alpha(x,y) >= 1 for all "
                 "pairs from alpha-admissibility, which was neither "
                 "hypothesized nor follows from the definition; the "
                 "demonstration exhibits an admissible alpha below 1 "
                 "everywhere. No fixed-point existence argument is offered "
                 "at all."}}});

  r.push_back({"SUG-EX-3.2", "Sug, Example 3.2",
               "Claimed common fixed point for Ax = x+1, By = y+1, Sx = x-1, "
               "Ty = y-1 on N with 4-adjacency.",
               Verdict::Refuted, std::nullopt,
               {{EvidenceKind::Counterexample,
                 "None of the four printed maps has any fixed point; the "
                 "4-adjacency on N is also never defined, and the displayed "
                 "inequality uses undefined psi, alpha, varphi."}}});

  r.push_back({"SUG-M6", "Sug, definition of M_6",
               "Function class M_6 defined through integral conditions on "
               "phi over [0,1]^6.",
               Verdict::Unproven, std::nullopt,
               {{EvidenceKind::DocOnly,
                 "The conditions conflate phi with an undefined varphi; read "
                 "one way the class is undefined, read the other every "
                 "continuous function qualifies. Claims built on M_6 "
                 "membership cannot be assessed."}}});

  const char* tiwari_stmt =
      "Continuous onto pair expanding against a parameter combination has a "
      "common fixed point.";
  r.push_back({"TIWARI-3.1", "TiwariEtAl, Theorem 3.1", tiwari_stmt,
               Verdict::Trivializes, std::nullopt,
               {{EvidenceKind::Sweep,
                 "With all constants positive the inequality forces T1 = T2 = "
                 "id, and alpha > 1 forces a one-point space."}}});
  r.push_back({"TIWARI-3.2", "TiwariEtAl, Theorem 3.2", tiwari_stmt,
               Verdict::Trivializes, std::nullopt,
               {{EvidenceKind::Sweep,
                 "Same trivialization sweep against the variant-2 bracket."}}});
  r.push_back({"TIWARI-3.3", "TiwariEtAl, Theorem 3.3", tiwari_stmt,
               Verdict::Unproven, Verdict::Trivializes,
               {{EvidenceKind::GapDemo,
                 "The printed constraints admit 1-(beta+eta) < 0, reversing "
                 "the division step the proof leans on."},
                {EvidenceKind::Sweep, "Variant-3 trivialization sweep."}}});
  r.push_back({"TIWARI-3.4", "TiwariEtAl, Theorem 3.4", tiwari_stmt,
               Verdict::Unproven, Verdict::Trivializes,
               {{EvidenceKind::GapDemo,
                 "The hypotheses force 1-(alpha+beta) < 0, so the claimed "
                 "ratio bound reverses; the bracket is also misprinted and "
                 "is implemented in its repaired reading."},
                {EvidenceKind::Sweep, "Variant-4 trivialization sweep."}}});
  r.push_back({"TIWARI-3.5", "TiwariEtAl, Theorem 3.5", tiwari_stmt,
               Verdict::Unproven, Verdict::Trivializes,
               {{EvidenceKind::GapDemo,
                 "The recurrence only controls odd-index steps; a sequence "
                 "flat on even steps defeats the claimed geometric bound."},
                {EvidenceKind::Sweep, "Variant-5 trivialization sweep."}}});

  return r;
}

bool executable(const AssertionRecord& rec) {
  return std::any_of(rec.evidence.begin(), rec.evidence.end(),
                     [](const EvidenceSpec& e) {
                       return e.kind != EvidenceKind::DocOnly;
                     });
}

}  // namespace

const std::vector<AssertionRecord>& list_assertions() {
  static const std::vector<AssertionRecord> registry = build_registry();
  return registry;
}

const AssertionRecord* find_assertion(const std::string& id) {
  for (const AssertionRecord& r : list_assertions()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

AuditReport run_audit(const std::string& id, const AuditOptions& opts) {
  const AssertionRecord* rec = find_assertion(id);
  if (!rec) throw std::invalid_argument("run_audit: unknown assertion id " + id);

  AuditReport rep;
  rep.id = id;

  if (!executable(*rec)) {
    rep.status = AuditStatus::SkippedDocOnly;
    for (const EvidenceSpec& e : rec->evidence) {
      rep.checks.push_back(check("citation", true, e.description));
    }
    return rep;
  }

  const int N = std::max(3, opts.prefix_n);
  Checks checks;
  if (id == "ALMU-2.5") {
    checks = almu25_checks();
  } else if (id == "ALMU-2.6") {
    checks = almu26_checks(opts.budget);
  } else if (id == "DALAL-3.1") {
    checks = decreasing_gap_checks(N);
  } else if (id == "GH-C3.1") {
    checks = gh_c31_checks();
  } else if (id == "GH-3.4") {
    checks = gh34_checks(opts.budget);
  } else if (id == "GUPTA-3.1") {
    checks = decreasing_gap_checks(N);
    for (AuditCheck& c : theta_constancy_checks()) checks.push_back(std::move(c));
  } else if (id == "RANI-3.1") {
    checks = rani_checks(opts.budget);
  } else if (id == "SJ-2.15") {
    checks = sj215_checks();
  } else if (id == "SUG-3.1") {
    checks = sug31_checks(N);
  } else if (id == "SUG-3.2") {
    checks = sug32_checks();
  } else if (id == "SUG-EX-3.2") {
    checks = sugex32_checks(N);
  } else if (id == "TIWARI-3.1" || id == "TIWARI-3.2" || id == "TIWARI-3.3" ||
             id == "TIWARI-3.4" || id == "TIWARI-3.5") {
    const int variant = id.back() - '0';
    if (variant == 3) checks = tiwari33_gap();
    if (variant == 4) checks = tiwari34_gap();
    if (variant == 5) checks = tiwari35_gap();
    for (AuditCheck& c : tiwari_sweep_checks(variant, opts.budget)) {
      checks.push_back(std::move(c));
    }
  } else {
    throw std::logic_error("run_audit: executable record without a runner: " + id);
  }

  rep.checks = std::move(checks);
  const bool all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                                    [](const AuditCheck& c) { return c.pass; });
  rep.status = all_pass ? AuditStatus::Confirmed : AuditStatus::Failed;
  return rep;
}

}  // namespace digitop
