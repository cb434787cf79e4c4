#include "digitop/freezing.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace digitop {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

void require_subset(const DigitalImage& X, const std::vector<Point>& A,
                    const char* who) {
  for (const Point& a : A) {
    if (!X.contains(a)) {
      throw std::invalid_argument(std::string(who) + ": set not a subset of X");
    }
  }
}

// Witness validity is re-checked from scratch; a search bug must not be able
// to smuggle an invalid witness into a report.
void validate_witness(const SelfMap& w, const std::vector<Point>& A) {
  if (w.is_identity()) throw std::logic_error("freezing witness equals identity");
  if (!is_continuous(w)) throw std::logic_error("freezing witness not continuous");
  for (const Point& a : A) {
    if (w.apply(a) != a) throw std::logic_error("freezing witness moves a pinned point");
  }
}

}  // namespace

std::string to_string(FreezingReport::Verdict v) {
  switch (v) {
    case FreezingReport::Verdict::Freezing: return "FREEZING";
    case FreezingReport::Verdict::NotFreezing: return "NOT_FREEZING";
    case FreezingReport::Verdict::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

FreezingReport is_freezing_set(ImagePtr X, const std::vector<Point>& A,
                               std::uint64_t budget) {
  require_subset(*X, A, "is_freezing_set");
  const auto t0 = Clock::now();

  EnumerationConstraints c;
  c.require_continuous = true;
  c.forbid_identity = true;
  c.node_budget = budget;
  for (const Point& a : A) c.pinned.emplace_back(a, a);

  std::optional<SelfMap> witness;
  const EnumerationResult r =
      enumerate_maps(X, c, [&](const SelfMap& m) {
        witness = m;
        return false;  // first hit settles the verdict
      });

  FreezingReport report;
  report.nodes_explored = r.nodes;
  report.elapsed = since(t0);
  if (witness) {
    validate_witness(*witness, A);
    report.verdict = FreezingReport::Verdict::NotFreezing;
    report.witness = std::move(witness);
  } else if (r.status == EnumerationStatus::BudgetExceeded) {
    report.verdict = FreezingReport::Verdict::BudgetExceeded;
  } else {
    report.verdict = FreezingReport::Verdict::Freezing;
  }
  return report;
}

MinimalityReport is_minimal_freezing_set(ImagePtr X, const std::vector<Point>& A,
                                         std::uint64_t budget) {
  const auto t0 = Clock::now();
  MinimalityReport out;
  out.base = is_freezing_set(X, A, budget);
  out.nodes_explored = out.base.nodes_explored;
  if (out.base.verdict == FreezingReport::Verdict::BudgetExceeded) {
    out.verdict = MinimalityReport::Verdict::BudgetExceeded;
    out.elapsed = since(t0);
    return out;
  }
  if (out.base.verdict == FreezingReport::Verdict::NotFreezing) {
    out.verdict = MinimalityReport::Verdict::NotFreezing;
    out.elapsed = since(t0);
    return out;
  }
  for (std::size_t drop = 0; drop < A.size(); ++drop) {
    std::vector<Point> reduced;
    reduced.reserve(A.size() - 1);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i != drop) reduced.push_back(A[i]);
    }
    const FreezingReport sub = is_freezing_set(X, reduced, budget);
    out.nodes_explored += sub.nodes_explored;
    if (sub.verdict == FreezingReport::Verdict::BudgetExceeded) {
      out.verdict = MinimalityReport::Verdict::BudgetExceeded;
      out.elapsed = since(t0);
      return out;
    }
    if (sub.verdict == FreezingReport::Verdict::Freezing) {
      out.verdict = MinimalityReport::Verdict::NotMinimal;
      out.removable = A[drop];
      out.elapsed = since(t0);
      return out;
    }
  }
  out.verdict = MinimalityReport::Verdict::Minimal;
  out.elapsed = since(t0);
  return out;
}

TransferReport transfer_freezing(const std::vector<Point>& A, const ImageMap& F,
                                 std::uint64_t budget, bool verify_source) {
  if (!is_isomorphism(F)) {
    throw std::invalid_argument(
        "transfer_freezing: map is not an isomorphism (hypothesis failure)");
  }
  require_subset(F.source(), A, "transfer_freezing");
  TransferReport out;
  if (verify_source) {
    out.source_report = is_freezing_set(F.source_ptr(), A, budget);
    if (out.source_report.verdict != FreezingReport::Verdict::Freezing) {
      throw std::invalid_argument(
          "transfer_freezing: A is not a freezing set for the source");
    }
  }
  std::set<Point> mapped;
  for (const Point& a : A) mapped.insert(F.apply(a));
  out.mapped_set.assign(mapped.begin(), mapped.end());
  out.target_report = is_freezing_set(F.target_ptr(), out.mapped_set, budget);
  return out;
}

ProjectionFreezingReport check_projection_freezing(ImagePtr X,
                                                   const std::vector<Point>& A,
                                                   std::uint64_t budget) {
  if (X->adjacency().kind() != Adjacency::Kind::NormalProduct) {
    throw std::invalid_argument(
        "check_projection_freezing: image is not a normal product");
  }
  ProjectionFreezingReport out;
  out.product_report = is_freezing_set(X, A, budget);
  if (out.product_report.verdict != FreezingReport::Verdict::Freezing) {
    throw std::invalid_argument(
        "check_projection_freezing: A is not freezing for the product "
        "(hypothesis failure)");
  }
  const int arity = X->adjacency().arity();
  for (int i = 0; i < arity; ++i) {
    auto factor = share(projection(*X, i));
    std::set<Point> proj;
    for (const Point& a : A) proj.insert(project_point(*X, a, i));
    std::vector<Point> pa(proj.begin(), proj.end());
    out.factor_reports.push_back(is_freezing_set(factor, pa, budget));
    out.projected_sets.push_back(std::move(pa));
  }
  return out;
}

BoundaryFixResult check_boundary_fix_extension(const DigitalImage& X,
                                               const std::vector<Point>& A,
                                               const SelfMap& f) {
  require_subset(X, A, "check_boundary_fix_extension");
  if (!(f.domain() == X)) {
    throw std::invalid_argument("check_boundary_fix_extension: domain mismatch");
  }
  if (!is_continuous(f)) {
    throw std::invalid_argument("check_boundary_fix_extension: f not continuous");
  }
  const std::vector<Point> bd = boundary(X.dimension(), A);
  BoundaryFixResult r;
  r.hypothesis = std::all_of(bd.begin(), bd.end(),
                             [&](const Point& p) { return f.apply(p) == p; });
  r.conclusion = std::all_of(A.begin(), A.end(),
                             [&](const Point& p) { return f.apply(p) == p; });
  r.holds = !r.hypothesis || r.conclusion;
  return r;
}

RetractExclusionReport check_retract_exclusion(ImagePtr X,
                                               const std::vector<Point>& Xprime,
                                               std::uint64_t budget) {
  require_subset(*X, Xprime, "check_retract_exclusion");
  std::set<Point> prime(Xprime.begin(), Xprime.end());
  if (prime.size() == X->size()) {
    // X is always a retract of itself via the identity; the statement needs
    // properness to have content.
    throw std::invalid_argument(
        "check_retract_exclusion: Xprime must be a proper subset");
  }

  EnumerationConstraints c;
  c.require_continuous = true;
  c.node_budget = budget;
  c.allowed_range = std::vector<Point>(prime.begin(), prime.end());
  for (const Point& p : prime) c.pinned.emplace_back(p, p);

  std::optional<SelfMap> retraction;
  const EnumerationResult r = enumerate_maps(X, c, [&](const SelfMap& m) {
    retraction = m;
    return false;
  });
  if (!retraction) {
    if (r.status == EnumerationStatus::BudgetExceeded) {
      throw BudgetExceededError(
          "check_retract_exclusion: budget exhausted before finding a retraction");
    }
    throw std::invalid_argument(
        "check_retract_exclusion: no retraction onto Xprime exists "
        "(hypothesis failure)");
  }
  if (!is_retraction(*retraction, Xprime)) {
    throw std::logic_error("check_retract_exclusion: search emitted a non-retraction");
  }

  RetractExclusionReport out{std::move(*retraction),
                             is_freezing_set(X, Xprime, budget)};
  return out;
}

SubsetSearchResult search_freezing_subsets(ImagePtr X, int max_size,
                                           std::uint64_t budget) {
  const int n = static_cast<int>(X->size());
  if (max_size < 0 || max_size > n) {
    throw std::invalid_argument("search_freezing_subsets: max_size out of range");
  }
  SubsetSearchResult out;
  out.exhausted = true;
  std::uint64_t used = 0;

  std::vector<std::vector<int>> found;  // minimal sets as index lists
  std::vector<int> combo;

  // Size-ascending scan; a freezing set with no smaller freezing subset is
  // minimal because non-freezing sets are downward-closed.
  for (int size = 0; size <= max_size; ++size) {
    combo.assign(size, 0);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      const bool dominated = std::any_of(
          found.begin(), found.end(), [&](const std::vector<int>& m) {
            return std::includes(combo.begin(), combo.end(), m.begin(), m.end());
          });
      if (!dominated) {
        std::vector<Point> A;
        A.reserve(size);
        for (int i : combo) A.push_back(X->point(i));
        if (used >= budget) {
          out.exhausted = false;
          return out;
        }
        const FreezingReport r = is_freezing_set(X, A, budget - used);
        used += r.nodes_explored;
        out.nodes_explored = used;
        if (r.verdict == FreezingReport::Verdict::BudgetExceeded) {
          out.exhausted = false;
          return out;
        }
        if (r.verdict == FreezingReport::Verdict::Freezing) {
          found.push_back(combo);
          out.minimal_sets.push_back(std::move(A));
        }
      }
      if (size == 0) break;
      // next lexicographic combination
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace digitop
