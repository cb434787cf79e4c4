#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "digitop/enumerate.hpp"
#include "digitop/selfmap.hpp"

namespace digitop {

// A is a freezing set for X when the only continuous self-map fixing A
// pointwise is the identity. Verdicts are sound: FREEZING is emitted only
// after the constrained search space was exhausted, never on a spent budget.
struct FreezingReport {
  enum class Verdict { Freezing, NotFreezing, BudgetExceeded };
  Verdict verdict = Verdict::BudgetExceeded;  // "nothing established" default
  // Present iff NotFreezing: a continuous non-identity map fixing A,
  // re-validated independently of the search before emission.
  std::optional<SelfMap> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

std::string to_string(FreezingReport::Verdict v);

FreezingReport is_freezing_set(ImagePtr X, const std::vector<Point>& A,
                               std::uint64_t budget);

// A is minimal when it is freezing and no single-point removal stays
// freezing. Single-point removals suffice: a superset of a freezing set is
// freezing, so non-freezing subsets are downward-closed and any freezing
// proper subset would make some A \ {a} freezing as well.
struct MinimalityReport {
  enum class Verdict { Minimal, NotFreezing, NotMinimal, BudgetExceeded };
  Verdict verdict;
  FreezingReport base;                  // the verdict for A itself
  std::optional<Point> removable;       // when NotMinimal: A\{removable} freezes
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

MinimalityReport is_minimal_freezing_set(ImagePtr X, const std::vector<Point>& A,
                                         std::uint64_t budget);

// Pushes a freezing set through an isomorphism and re-verifies it on the
// target image. Throws when F is not an isomorphism (that hypothesis is the
// whole point), or when verify_source is set and A fails to freeze the
// source.
struct TransferReport {
  std::vector<Point> mapped_set;  // F(A), lexicographic
  FreezingReport source_report;   // populated when verify_source
  FreezingReport target_report;
};

TransferReport transfer_freezing(const std::vector<Point>& A, const ImageMap& F,
                                 std::uint64_t budget, bool verify_source = true);

// For a normal-product image and a verified freezing set A, checks that each
// factor projection p_i(A) freezes its factor. Throws when A is not freezing
// for the product (hypothesis failure).
struct ProjectionFreezingReport {
  FreezingReport product_report;
  std::vector<std::vector<Point>> projected_sets;
  std::vector<FreezingReport> factor_reports;
};

ProjectionFreezingReport check_projection_freezing(ImagePtr X,
                                                   const std::vector<Point>& A,
                                                   std::uint64_t budget);

// For a continuous f: does "Bd(A) fixed pointwise implies A fixed pointwise"
// hold for this particular f? Bd is the ambient-Z^n boundary of the set A.
// Throws when f is not continuous or A is not a subset of X.
struct BoundaryFixResult {
  bool hypothesis;  // Bd(A) inside Fix(f)
  bool conclusion;  // A inside Fix(f)
  bool holds;       // hypothesis implies conclusion for this f
};

BoundaryFixResult check_boundary_fix_extension(const DigitalImage& X,
                                               const std::vector<Point>& A,
                                               const SelfMap& f);

// A proper retract Xprime contains no freezing set. By upward closure it
// suffices that Xprime itself is not freezing; the retraction found is
// already a continuous non-identity map fixing Xprime. Throws when Xprime is
// not proper or no retraction onto it exists.
struct RetractExclusionReport {
  SelfMap retraction;
  FreezingReport report;  // for Xprime; expected NotFreezing
};

RetractExclusionReport check_retract_exclusion(ImagePtr X,
                                               const std::vector<Point>& Xprime,
                                               std::uint64_t budget);

// All inclusion-minimal freezing sets of size <= max_size, in deterministic
// (size, then lexicographic) order. Intended for |X| <= 12.
struct SubsetSearchResult {
  std::vector<std::vector<Point>> minimal_sets;
  bool exhausted;  // false when the budget ran out; results are partial
  std::uint64_t nodes_explored = 0;
};

SubsetSearchResult search_freezing_subsets(ImagePtr X, int max_size,
                                           std::uint64_t budget);

}  // namespace digitop
