#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "digitop/selfmap.hpp"

namespace digitop {

// Thrown by operations that cannot deliver a partial result when their node
// budget runs out (search-style ops return an explicit status instead).
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constraints for the self-map search engine.
//
// Engine contract: points are assigned in breadth-first order from the
// lexicographically least root of each component, so every non-root point
// has an already-assigned neighbor when its turn comes. Under
// require_continuous the candidate images of a point are the intersection of
// the closed neighborhoods of its already-assigned neighbors' images, which
// is what makes the search sound and keeps it sharply pruned. Candidates are
// tried in lexicographic order, so enumeration order is deterministic.
struct EnumerationConstraints {
  std::vector<std::pair<Point, Point>> pinned;  // partial assignment
  bool require_continuous = false;
  bool require_onto = false;
  // Checked against the finished table, never inside the tree, so pruning
  // stays sound.
  bool forbid_identity = false;
  std::uint64_t node_budget = 10'000'000;
  // Restricts every image value to this set (used by retraction searches).
  std::optional<std::vector<Point>> allowed_range;
};

enum class EnumerationStatus {
  Complete,          // search space exhausted
  StoppedByVisitor,  // visitor asked to stop after a hit
  BudgetExceeded,    // node budget ran out; results are partial
};

struct EnumerationResult {
  EnumerationStatus status;
  std::uint64_t count;  // maps emitted
  std::uint64_t nodes;  // search-tree nodes visited
};

// Return false to stop the enumeration after the current map.
using MapVisitor = std::function<bool(const SelfMap&)>;

// Visits exactly the self-maps of X satisfying the constraints, in a
// deterministic order. Budget exhaustion is reported explicitly and never
// silently truncates.
EnumerationResult enumerate_maps(ImagePtr X, const EnumerationConstraints& c,
                                 const MapVisitor& visit = {});

// Deterministic parallel partitioning by the root point's candidate image.
// Each of the `jobs` workers gets an equal share of the node budget; the
// visitor is invoked under a lock, and aggregated counts are
// order-independent. Streamed order is defined only in serial mode.
EnumerationResult enumerate_maps_parallel(ImagePtr X,
                                          const EnumerationConstraints& c,
                                          int jobs,
                                          const MapVisitor& visit = {});

}  // namespace digitop
