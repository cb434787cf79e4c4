#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "digitop/contraction.hpp"
#include "digitop/enumerate.hpp"
#include "support/oracle.hpp"

using namespace digitop;

namespace {

SelfMap from_table(ImagePtr X, std::vector<int> t) { return SelfMap(X, std::move(t)); }

bool constant_table(const std::vector<int>& t) {
  return std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; });
}

}  // namespace

TEST_CASE("digital contraction coefficient") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);

  const ContractionReport c0 =
      digital_contraction_coefficient(SelfMap::constant(X, Point{1}), l1);
  CHECK(c0.satisfied);
  CHECK(c0.best_coefficient->value() == 0.0);

  const ContractionReport cid =
      digital_contraction_coefficient(SelfMap::identity(X), l1);
  CHECK_FALSE(cid.satisfied);
  CHECK(cid.best_coefficient->str() == "1");

  const ContractionReport cs =
      digital_contraction_coefficient(from_table(X, {0, 0, 1}), l1);
  CHECK_FALSE(cs.satisfied);
  CHECK(cs.best_coefficient->str() == "1");
  CHECK(cs.witness_pair == std::pair<Point, Point>{Point{1}, Point{2}});

  auto single = oracle::image_of(1, {Point{0}}, Adjacency::cu(1));
  const ContractionReport c1 =
      digital_contraction_coefficient(SelfMap::identity(single), l1);
  CHECK(c1.satisfied);
  CHECK(c1.best_coefficient->value() == 0.0);
}

TEST_CASE("quasi-contraction against the 5-term maximum") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);

  const ContractionReport q =
      is_quasi_contraction(from_table(X, {0, 0, 1}), l1);
  CHECK(q.satisfied);
  CHECK(q.best_coefficient->str() == "1/2");

  const ContractionReport qid = is_quasi_contraction(SelfMap::identity(X), l1);
  CHECK_FALSE(qid.satisfied);
  CHECK(qid.best_coefficient->str() == "1");

  const ContractionReport qc =
      is_quasi_contraction(SelfMap::constant(X, Point{2}), l1);
  CHECK(qc.satisfied);
}

TEST_CASE("quasi coefficient never exceeds the plain contraction coefficient") {
  auto X = oracle::interval(0, 2);
  for (const Metric& d : {Metric::lp(1), Metric::shortest_path(X)}) {
    oracle::for_all_tables(3, [&](const std::vector<int>& t) {
      const SelfMap S(X, t);
      const ContractionReport plain = digital_contraction_coefficient(S, d);
      const ContractionReport quasi = is_quasi_contraction(S, d);
      CHECK_FALSE(plain.best_coefficient->less_than(*quasi.best_coefficient));
      if (plain.satisfied) CHECK(quasi.satisfied);
    });
  }
}

TEST_CASE("theta-contraction admission via the monotone envelope") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);

  const ThetaReport constant =
      admits_theta_contraction(SelfMap::constant(X, Point{0}), l1);
  CHECK(constant.admits);
  REQUIRE(constant.witness_theta.has_value());
  // emitted witness is sqrt(t)/2 when nothing binds
  for (const auto& [t, v] : constant.witness_theta->samples) {
    CHECK(v == doctest::Approx(std::sqrt(t) / 2));
    CHECK(v < std::sqrt(t));
  }

  const ThetaReport ident = admits_theta_contraction(SelfMap::identity(X), l1);
  CHECK_FALSE(ident.admits);  // theta(1) >= 1 impossible

  const ThetaReport shift = admits_theta_contraction(from_table(X, {0, 0, 1}), l1);
  CHECK_FALSE(shift.admits);  // spread 1 maps to distance 1

  // non-constant admitting map on a stretched 1-D set
  auto Y = oracle::image_of(1, {Point{0}, Point{1}, Point{4}}, Adjacency::cu(1));
  const SelfMap T = from_table(Y, {0, 0, 1});
  const ThetaReport ok = admits_theta_contraction(T, Metric::lp(1));
  CHECK(ok.admits);
  REQUIRE(ok.witness_theta.has_value());
  // witness table dominates the realized image distances and stays under
  // sqrt(t)
  CHECK(ok.witness_theta->at(4.0) >= 1.0);
  CHECK(ok.witness_theta->at(4.0) < 2.0);
}

TEST_CASE("strict domination check excludes equal pairs") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);
  CHECK(check_dominated_pair(SelfMap::constant(X, Point{0}), SelfMap::identity(X), l1));
  CHECK_FALSE(check_dominated_pair(SelfMap::identity(X), SelfMap::identity(X), l1));
  CHECK(check_dominated_pair(SelfMap::constant(X, Point{1}), SelfMap::identity(X), l1));
}

TEST_CASE("constant forcing certificate and sweep") {
  auto X = oracle::interval(0, 2);
  const ConstantForcingReport sp =
      verify_constant_forcing(X, Metric::shortest_path(X), 10'000'000);
  CHECK(sp.confirmed);
  CHECK(sp.sweep_ran);
  CHECK(sp.violations == 0);

  auto sq = oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(1));
  const ConstantForcingReport l1 =
      verify_constant_forcing(sq, Metric::lp(1), 10'000'000);
  CHECK(l1.confirmed);
  CHECK(l1.violations == 0);

  // hypothesis violations are rejected outright
  auto gap = oracle::image_of(1, {Point{0}, Point{2}}, Adjacency::cu(1));
  CHECK_THROWS_AS(verify_constant_forcing(gap, Metric::lp(1), 1000),
                  std::invalid_argument);
  auto c2sq = oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(2));
  CHECK_THROWS_AS(verify_constant_forcing(c2sq, Metric::lp(1), 1000),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      verify_constant_forcing(c2sq, Metric::shortest_path(oracle::interval(0, 1)), 1000),
      std::invalid_argument);
}

TEST_CASE("constructive common fixed point") {
  auto X = oracle::interval(0, 3);
  const Metric l1 = Metric::lp(1);
  const SelfMap g = SelfMap::identity(X);
  const SelfMap f = SelfMap::constant(X, Point{2});

  const CommonFixedPointResult r = rani_common_fixed_point(f, g, l1, Rational(1, 2));
  CHECK(r.point == Point{2});
  CHECK(r.trace.front() == Point{0});

  // singleton: everything is the fixed point
  auto single = oracle::image_of(1, {Point{4}}, Adjacency::cu(1));
  const CommonFixedPointResult s = rani_common_fixed_point(
      SelfMap::identity(single), SelfMap::identity(single), l1, Rational(1, 2));
  CHECK(s.point == Point{4});

  // named hypothesis failures
  CHECK_THROWS_WITH_AS(
      rani_common_fixed_point(g, g, l1, Rational(1, 2)),
      doctest::Contains("d(fx,fy) <= q d(gx,gy)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(rani_common_fixed_point(f, g, l1, Rational(3, 2)),
                       doctest::Contains("0 < q < 1"), std::invalid_argument);
  const SelfMap g0 = SelfMap::constant(X, Point{0});
  CHECK_THROWS_WITH_AS(rani_common_fixed_point(f, g0, l1, Rational(1, 2)),
                       doctest::Contains("f(X) not inside g(X)"),
                       std::invalid_argument);
  // commuting failure: f(x)=2 constant, g fixing 2's preimage structure but
  // not commuting: g = (1,2,3,3): f(g(x)) = 2, g(f(x)) = g(2) = 3
  const SelfMap gshift = from_table(X, {1, 2, 3, 3});
  CHECK_THROWS_WITH_AS(rani_common_fixed_point(f, gshift, l1, Rational(1, 2)),
                       doctest::Contains("commute"), std::invalid_argument);
}

TEST_CASE("expansive-pair inequalities") {
  const Metric l1 = Metric::lp(1);
  auto single = oracle::image_of(1, {Point{0}}, Adjacency::cu(1));
  const TiwariParams any{Rational(5), Rational(5), Rational(5), Rational(5)};
  for (int v = 1; v <= 5; ++v) {
    CHECK(tiwari_inequality_holds(SelfMap::identity(single),
                                  SelfMap::identity(single), l1, any, v));
  }

  auto two = oracle::interval(0, 1);
  const TiwariParams strong{Rational(2), Rational(1), Rational(1), Rational(1)};
  CHECK_FALSE(tiwari_inequality_holds(SelfMap::identity(two),
                                      SelfMap::identity(two), l1, strong, 1));

  auto three = oracle::interval(0, 2);
  const TiwariParams mild{Rational(1), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(tiwari_inequality_holds(SelfMap::identity(three),
                                SelfMap::identity(three), l1, mild, 1));

  CHECK_THROWS_AS(tiwari_inequality_holds(SelfMap::identity(two),
                                          SelfMap::identity(two), l1, mild, 6),
                  std::invalid_argument);
}

TEST_CASE("trivialization sweeps") {
  const Metric l1 = Metric::lp(1);
  auto X = oracle::interval(0, 2);
  const TiwariParams p{Rational(1, 2), Rational(3, 4), Rational(1, 4), Rational(1, 4)};
  const TrivializationReport r = tiwari_trivialization_check(X, l1, 1, p, 1'000'000);
  CHECK(r.conclusion_holds);
  CHECK(r.satisfying_pairs == 1);  // exactly (id, id)
  CHECK(r.all_satisfying_are_identity);
  CHECK(r.pairs_swept == 27 * 6);

  auto two = oracle::interval(0, 1);
  const TiwariParams big{Rational(2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  const TrivializationReport none =
      tiwari_trivialization_check(two, l1, 2, big, 1'000'000);
  CHECK(none.alpha_above_one);
  CHECK(none.satisfying_pairs == 0);
  CHECK(none.conclusion_holds);

  auto single = oracle::image_of(1, {Point{0}}, Adjacency::cu(1));
  const TrivializationReport triv =
      tiwari_trivialization_check(single, l1, 1, big, 1'000);
  CHECK(triv.satisfying_pairs == 1);
  CHECK(triv.conclusion_holds);

  const TiwariParams negative{Rational(-1), Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(tiwari_trivialization_check(X, l1, 1, negative, 1'000),
                  std::invalid_argument);
}

TEST_CASE("quasi-contraction orbits collapse to the unique fixed point") {
  const QuasiOrbitReport r = quasi_orbit_theorem_check(oracle::interval(0, 2), 1'000'000);
  CHECK(r.maps_swept == 27);
  CHECK(r.quasi_contractions > 0);
  CHECK(r.violations == 0);

  auto sq = share(product(
      {rectangle({1}, Adjacency::cu(1)), rectangle({1}, Adjacency::cu(1))}));
  const QuasiOrbitReport r2 = quasi_orbit_theorem_check(sq, 1'000'000);
  CHECK(r2.maps_swept == 256);
  CHECK(r2.violations == 0);

  auto gap = oracle::image_of(1, {Point{0}, Point{2}}, Adjacency::cu(1));
  CHECK_THROWS_AS(quasi_orbit_theorem_check(gap, 1'000), std::invalid_argument);
}

TEST_CASE("printed six-term maximum") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);
  const SelfMap id = SelfMap::identity(X);
  CHECK(m_of(Point{1}, Point{1}, id, id, id, id, l1) == 0.0);
  CHECK(m_of(Point{0}, Point{2}, id, id, id, id, l1) == 2.0);
  // S = A and x = y zeroes the ratio term; value reduces to d(Sx, Tx)
  const SelfMap c2 = SelfMap::constant(X, Point{2});
  CHECK(m_of(Point{0}, Point{0}, c2, id, c2, id, l1) == 2.0);
}

TEST_CASE("alpha-admissibility") {
  auto X = oracle::interval(0, 2);
  const SelfMap id = SelfMap::identity(X);
  CHECK(is_alpha_admissible(id, PairWeightTable::constant(X, 0.0)));
  CHECK(is_alpha_admissible(id, PairWeightTable::constant(X, 1.0)));

  auto two = oracle::interval(0, 1);
  PairWeightTable w = PairWeightTable::constant(two, 0.0);
  w.set(Point{0}, Point{1}, 1.0);
  const SelfMap swap = from_table(two, {1, 0});
  CHECK_FALSE(is_alpha_admissible(swap, w));  // needs w(1,0) >= 1
  CHECK(is_alpha_admissible(SelfMap::identity(two), w));
}

TEST_CASE("coefficient formatting and comparisons") {
  CHECK(Coeff::exact_ratio(Rational(1, 2)).str() == "1/2");
  CHECK(Coeff::exact_sqrt(Rational(1, 4)).str() == "1/2");  // perfect square
  CHECK(Coeff::exact_sqrt(Rational(1, 2)).str() == "sqrt(1/2)");
  CHECK(Coeff::exact_ratio(Rational(1)).compare_to_one() == Cmp::Equal);
  CHECK(Coeff::exact_sqrt(Rational(1, 2)).compare_to_one() == Cmp::Less);
  CHECK(Coeff::exact_ratio(Rational(1, 2))
            .less_than(Coeff::exact_sqrt(Rational(1, 2))));  // 1/2 < sqrt(1/2)
}
