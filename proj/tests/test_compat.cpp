#include <doctest.h>

#include <random>

#include "digitop/compat.hpp"
#include "support/oracle.hpp"

using namespace digitop;

namespace {

SelfMap from_table(ImagePtr X, std::vector<int> t) { return SelfMap(X, std::move(t)); }

}  // namespace

TEST_CASE("coincidence points") {
  auto X = oracle::interval(0, 2);
  const SelfMap id = SelfMap::identity(X);
  CHECK(coincidence_points(id, id) == X->points());

  auto two = oracle::interval(0, 1);
  CHECK(coincidence_points(from_table(two, {1, 0}), SelfMap::identity(two)).empty());

  const SelfMap S = from_table(X, {1, 2, 2});
  const SelfMap T = from_table(X, {1, 0, 2});
  CHECK(coincidence_points(S, T) == std::vector<Point>{Point{0}, Point{2}});
}

TEST_CASE("weak compatibility") {
  auto X = oracle::interval(0, 2);
  const SelfMap S = from_table(X, {1, 2, 2});
  const SelfMap T = from_table(X, {1, 0, 2});

  auto two = oracle::interval(0, 1);
  CHECK(is_weakly_compatible(from_table(two, {1, 0}), SelfMap::identity(two)).value);
  CHECK(is_weakly_compatible(S, S).value);

  const WeakCompatibilityResult w = is_weakly_compatible(S, T);
  CHECK_FALSE(w.value);
  CHECK(w.witness == Point{0});  // S(T0)=2, T(S0)=0
}

TEST_CASE("compatibility report") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);

  const CompatibilityReport all = compatibility_report(
      SelfMap::identity(X), SelfMap::identity(X), l1);
  CHECK(all.weakly_compatible);
  CHECK(all.compatible);
  CHECK(all.type_A);
  CHECK(all.type_P);
  CHECK(all.occasionally_weakly_compatible);
  CHECK_FALSE(all.vacuous);

  const SelfMap S = from_table(X, {1, 2, 2});
  const SelfMap T = from_table(X, {1, 0, 2});
  const CompatibilityReport r = compatibility_report(S, T, l1);
  CHECK_FALSE(r.compatible);
  CHECK_FALSE(r.type_A);
  CHECK_FALSE(r.type_P);
  CHECK(r.occasionally_weakly_compatible);  // x = 2 commutes
  CHECK(r.coincidence_points == std::vector<Point>{Point{0}, Point{2}});
  REQUIRE(r.failing_witness.has_value());
  CHECK(r.failing_witness->first == Point{0});
  CHECK(r.failing_witness->second == Point{1});

  auto two = oracle::interval(0, 1);
  const CompatibilityReport vac = compatibility_report(
      from_table(two, {1, 0}), SelfMap::identity(two), l1);
  CHECK(vac.vacuous);
  CHECK(vac.compatible);
  CHECK_FALSE(vac.occasionally_weakly_compatible);
}

TEST_CASE("finite-space equivalence across all pairs") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);
  oracle::for_all_tables(3, [&](const std::vector<int>& s) {
    const SelfMap S(X, s);
    oracle::for_all_tables(3, [&](const std::vector<int>& t) {
      const SelfMap T(X, t);
      // the report itself throws if compatible/type A/type P ever split
      const CompatibilityReport r = compatibility_report(S, T, l1);
      CHECK(r.compatible == r.type_A);
      CHECK(r.compatible == r.type_P);
      if (r.compatible) CHECK(r.weakly_compatible);
    });
  });
}

TEST_CASE("limit check on qualifying prefixes") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);
  const SelfMap id = SelfMap::identity(X);

  const LimitCheckResult still = compat_limit_check(
      id, id, {Point{0}, Point{1}, Point{1}}, l1);
  CHECK(still.holds);
  CHECK(still.pair_compatible);

  // constant prefix at a coincidence point of a compatible pair
  const SelfMap c1 = SelfMap::constant(X, Point{1});
  const LimitCheckResult con = compat_limit_check(
      c1, c1, {Point{2}, Point{2}}, l1);
  CHECK(con.holds);

  // the incompatible spec pair fails the conclusion at the tail
  const SelfMap S = from_table(X, {1, 2, 2});
  const SelfMap T = from_table(X, {1, 0, 2});
  const LimitCheckResult bad = compat_limit_check(S, T, {Point{0}}, l1);
  CHECK_FALSE(bad.pair_compatible);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness_index == 0);

  // prefix that never stabilizes on a shared value
  CHECK_THROWS_AS(compat_limit_check(S, T, {Point{1}}, l1), std::invalid_argument);
  CHECK_THROWS_AS(compat_limit_check(S, T, {}, l1), std::invalid_argument);
}

TEST_CASE("characterization agrees with direct tail evaluation on random pairs") {
  auto X = oracle::interval(0, 2);
  const Metric l1 = Metric::lp(1);
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> pick(0, 2);

  int produced = 0;
  while (produced < 100) {
    std::vector<int> s(3), t(3);
    for (int i = 0; i < 3; ++i) {
      s[i] = pick(rng);
      t[i] = pick(rng);
    }
    const SelfMap S(X, s);
    const SelfMap T(X, t);
    const std::vector<Point> coin = coincidence_points(S, T);
    if (coin.empty()) continue;
    ++produced;

    // random qualifying prefix: junk head, then a tail wandering inside the
    // fiber of one coincidence value
    const Point anchor = coin[pick(rng) % coin.size()];
    const int value = S.domain().index_of(S.apply(anchor));
    std::vector<int> fiber;
    for (int i = 0; i < 3; ++i) {
      if (s[i] == value && t[i] == value) fiber.push_back(i);
    }
    REQUIRE_FALSE(fiber.empty());
    std::vector<Point> prefix;
    const int head = pick(rng);
    for (int i = 0; i < head; ++i) prefix.push_back(X->point(pick(rng)));
    for (int i = 0; i < 4; ++i) {
      prefix.push_back(X->point(fiber[pick(rng) % fiber.size()]));
    }
    // direct tail evaluation of d(S T x_n, T S x_n) over the fiber tail
    bool tail_zero = true;
    for (std::size_t k = prefix.size() - 4; k < prefix.size(); ++k) {
      const Point st = S.apply(T.apply(prefix[k]));
      const Point ts = T.apply(S.apply(prefix[k]));
      if (!l1.distance(st, ts).is_zero()) tail_zero = false;
    }
    const CompatibilityReport rep = compatibility_report(S, T, l1);
    if (rep.compatible) {
      CHECK(tail_zero);
      const LimitCheckResult lim = compat_limit_check(S, T, prefix, l1);
      CHECK(lim.holds);
    }
    // incompatibility must be witnessed by some fiber, though not
    // necessarily the sampled one; when the sampled tail already breaks,
    // the report must agree.
    if (!tail_zero) CHECK_FALSE(rep.compatible);
  }
}
