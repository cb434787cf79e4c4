#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "digitop/freezing.hpp"
#include "support/oracle.hpp"

using namespace digitop;

namespace {

constexpr std::uint64_t kBudget = 10'000'000;

// Definition-level check, independent of the search: A freezes X iff no
// non-identity continuous table fixes A pointwise.
bool brute_freezing(const ImagePtr& X, const std::vector<int>& a_indices) {
  bool frozen = true;
  oracle::for_all_tables(static_cast<int>(X->size()), [&](const std::vector<int>& t) {
    if (!frozen) return;
    bool fixes = true;
    for (int i : a_indices) {
      if (t[i] != i) {
        fixes = false;
        break;
      }
    }
    if (!fixes) return;
    const SelfMap f(X, t);
    if (!f.is_identity() && is_continuous(f)) frozen = false;
  });
  return frozen;
}

void check_witness(const FreezingReport& r, const ImagePtr& X,
                   const std::vector<Point>& A) {
  REQUIRE(r.witness.has_value());
  const SelfMap& w = *r.witness;
  CHECK_FALSE(w.is_identity());
  // clause-by-clause, straight off the adjacency relation
  for (std::size_t i = 0; i < X->size(); ++i) {
    for (std::size_t j = i + 1; j < X->size(); ++j) {
      if (X->adjacent(static_cast<int>(i), static_cast<int>(j))) {
        const int fi = w.apply_index(static_cast<int>(i));
        const int fj = w.apply_index(static_cast<int>(j));
        CHECK((fi == fj || X->adjacent(fi, fj)));
      }
    }
  }
  for (const Point& a : A) CHECK(w.apply(a) == a);
}

}  // namespace

TEST_CASE("is_freezing_set on the 3-point interval") {
  auto X = oracle::interval(0, 2);

  const FreezingReport ends = is_freezing_set(X, {Point{0}, Point{2}}, kBudget);
  CHECK(ends.verdict == FreezingReport::Verdict::Freezing);
  CHECK(brute_freezing(X, {0, 2}));

  const FreezingReport left = is_freezing_set(X, {Point{0}}, kBudget);
  CHECK(left.verdict == FreezingReport::Verdict::NotFreezing);
  check_witness(left, X, {Point{0}});
  CHECK_FALSE(brute_freezing(X, {0}));

  const FreezingReport all = is_freezing_set(X, X->points(), kBudget);
  CHECK(all.verdict == FreezingReport::Verdict::Freezing);

  CHECK_THROWS_AS(is_freezing_set(X, {Point{9}}, kBudget), std::invalid_argument);

  const FreezingReport starved = is_freezing_set(X, {Point{0}, Point{2}}, 1);
  CHECK(starved.verdict == FreezingReport::Verdict::BudgetExceeded);
}

TEST_CASE("verdicts agree with the brute-force oracle across whole lattices") {
  const std::vector<ImagePtr> images = {
      oracle::interval(0, 2),
      oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(1)),
      oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(2)),
  };
  for (const ImagePtr& X : images) {
    const int n = static_cast<int>(X->size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> idx;
      std::vector<Point> A;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          idx.push_back(i);
          A.push_back(X->point(i));
        }
      }
      const FreezingReport r = is_freezing_set(X, A, kBudget);
      REQUIRE(r.verdict != FreezingReport::Verdict::BudgetExceeded);
      CHECK((r.verdict == FreezingReport::Verdict::Freezing) ==
            brute_freezing(X, idx));
      if (r.verdict == FreezingReport::Verdict::NotFreezing) check_witness(r, X, A);
    }
  }
}

TEST_CASE("freezing sets are upward closed") {
  const std::vector<ImagePtr> images = {
      oracle::interval(0, 2),
      oracle::interval(0, 4),
      oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(2)),
      oracle::image_of(2, {Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1},
                           Point{2, 0}, Point{2, 1}},
                       Adjacency::cu(1)),
  };
  for (const ImagePtr& X : images) {
    const int n = static_cast<int>(X->size());
    REQUIRE(n <= 6);
    std::map<unsigned, bool> frozen;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Point> A;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) A.push_back(X->point(i));
      }
      frozen[mask] =
          is_freezing_set(X, A, kBudget).verdict == FreezingReport::Verdict::Freezing;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!frozen[mask]) continue;
      for (unsigned super = mask; super < (1u << n);
           super = (super + 1) | mask) {
        CHECK(frozen[super]);
        if (super == (1u << n) - 1) break;
      }
    }
  }
}

TEST_CASE("minimality by single-point removals") {
  auto sq = oracle::image_of(2, rectangle({2, 2}).points(), Adjacency::cu(2));
  const MinimalityReport bd = is_minimal_freezing_set(sq, boundary(*sq), kBudget);
  CHECK(bd.verdict == MinimalityReport::Verdict::Minimal);

  auto X = oracle::interval(0, 2);
  const MinimalityReport fat =
      is_minimal_freezing_set(X, {Point{0}, Point{1}, Point{2}}, kBudget);
  CHECK(fat.verdict == MinimalityReport::Verdict::NotMinimal);
  CHECK(fat.removable == Point{1});

  auto single = oracle::image_of(1, {Point{0}}, Adjacency::cu(1));
  const MinimalityReport empty = is_minimal_freezing_set(single, {}, kBudget);
  CHECK(empty.verdict == MinimalityReport::Verdict::Minimal);

  const MinimalityReport notf = is_minimal_freezing_set(X, {Point{1}}, kBudget);
  CHECK(notf.verdict == MinimalityReport::Verdict::NotFreezing);
}

TEST_CASE("transfer through an isomorphism") {
  auto X = oracle::interval(0, 2);
  auto Y = oracle::interval(5, 7);
  const ImageMap shift = ImageMap::from_function(
      X, Y, [](const Point& p) { return Point{p[0] + 5}; });
  const TransferReport t = transfer_freezing({Point{0}, Point{2}}, shift, kBudget);
  CHECK(t.mapped_set == std::vector<Point>{Point{5}, Point{7}});
  CHECK(t.source_report.verdict == FreezingReport::Verdict::Freezing);
  CHECK(t.target_report.verdict == FreezingReport::Verdict::Freezing);

  const ImageMap ident = ImageMap::from_function(
      X, X, [](const Point& p) { return p; });
  const TransferReport same = transfer_freezing({Point{0}, Point{2}}, ident, kBudget);
  CHECK(same.target_report.verdict == FreezingReport::Verdict::Freezing);

  const ImageMap constant = ImageMap::from_function(
      X, X, [](const Point&) { return Point{0}; });
  CHECK_THROWS_AS(transfer_freezing({Point{0}}, constant, kBudget),
                  std::invalid_argument);
  // non-freezing source is a hypothesis failure too
  CHECK_THROWS_AS(transfer_freezing({Point{0}}, ident, kBudget),
                  std::invalid_argument);
}

TEST_CASE("projections of a product freezing set freeze the factors") {
  const DigitalImage prod = product(
      {rectangle({1}, Adjacency::cu(1)), rectangle({1}, Adjacency::cu(1))});
  auto X = share(prod);
  const ProjectionFreezingReport r =
      check_projection_freezing(X, X->points(), kBudget);
  REQUIRE(r.factor_reports.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(r.projected_sets[i] == std::vector<Point>{Point{0}, Point{1}});
    CHECK(r.factor_reports[i].verdict == FreezingReport::Verdict::Freezing);
  }
  // the diagonal does not freeze the complete-graph square: hypothesis error
  CHECK_THROWS_AS(
      check_projection_freezing(X, {Point{0, 0}, Point{1, 1}}, kBudget),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_projection_freezing(oracle::interval(0, 1), {Point{0}}, kBudget),
      std::invalid_argument);
}

TEST_CASE("boundary-fix extension for individual maps") {
  auto X = oracle::interval(0, 2);
  const SelfMap id = SelfMap::identity(X);
  const BoundaryFixResult r1 =
      check_boundary_fix_extension(*X, {Point{0}, Point{1}}, id);
  CHECK(r1.hypothesis);
  CHECK(r1.conclusion);
  CHECK(r1.holds);

  auto sq = oracle::image_of(2, rectangle({2, 2}).points(), Adjacency::cu(2));
  const BoundaryFixResult r2 = check_boundary_fix_extension(
      *sq, {Point{1, 1}}, SelfMap::identity(sq));
  CHECK(r2.holds);  // Bd({(1,1)}) = {(1,1)}, so hypothesis pins the point

  // all continuous f fixing Bd(X) = {0,2} must fix all of X = [0,2]
  EnumerationConstraints c;
  c.require_continuous = true;
  enumerate_maps(X, c, [&](const SelfMap& f) {
    const BoundaryFixResult r = check_boundary_fix_extension(*X, X->points(), f);
    CHECK(r.holds);
    return true;
  });

  const SelfMap discont = SelfMap(X, {0, 2, 2});
  CHECK_THROWS_AS(check_boundary_fix_extension(*X, {Point{0}}, discont),
                  std::invalid_argument);
}

TEST_CASE("retract exclusion") {
  auto X = oracle::interval(0, 2);
  const RetractExclusionReport r =
      check_retract_exclusion(X, {Point{0}, Point{1}}, kBudget);
  CHECK(r.report.verdict == FreezingReport::Verdict::NotFreezing);
  check_witness(r.report, X, {Point{0}, Point{1}});
  CHECK(is_retraction(r.retraction, {Point{0}, Point{1}}));
  CHECK_FALSE(r.retraction.is_identity());

  auto sq = oracle::image_of(2, rectangle({1, 1}).points(), Adjacency::cu(1));
  const RetractExclusionReport corner =
      check_retract_exclusion(sq, {Point{0, 0}}, kBudget);
  CHECK(corner.report.verdict == FreezingReport::Verdict::NotFreezing);

  // the whole image is not a proper subset
  CHECK_THROWS_AS(check_retract_exclusion(X, X->points(), kBudget),
                  std::invalid_argument);
  // {0,2} admits no retraction in [0,2]
  CHECK_THROWS_AS(check_retract_exclusion(X, {Point{0}, Point{2}}, kBudget),
                  std::invalid_argument);
}

TEST_CASE("search_freezing_subsets finds exactly the minimal sets") {
  auto X = oracle::interval(0, 2);
  const SubsetSearchResult r = search_freezing_subsets(X, 3, kBudget);
  CHECK(r.exhausted);
  REQUIRE(r.minimal_sets.size() == 1);
  CHECK(r.minimal_sets[0] == std::vector<Point>{Point{0}, Point{2}});

  auto single = oracle::image_of(1, {Point{0}}, Adjacency::cu(1));
  const SubsetSearchResult s = search_freezing_subsets(single, 1, kBudget);
  REQUIRE(s.minimal_sets.size() == 1);
  CHECK(s.minimal_sets[0].empty());

  auto pair = oracle::interval(0, 1);
  const SubsetSearchResult p = search_freezing_subsets(pair, 2, kBudget);
  REQUIRE(p.minimal_sets.size() == 1);
  CHECK(p.minimal_sets[0] == pair->points());

  CHECK_THROWS_AS(search_freezing_subsets(X, 9, kBudget), std::invalid_argument);
}
