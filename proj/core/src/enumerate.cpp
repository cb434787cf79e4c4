#include "digitop/enumerate.hpp"

#include <atomic>
#include <future>
#include <mutex>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace digitop {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct SearchGraph {
  int n = 0;
  std::vector<std::vector<int>> nbrs;   // sorted adjacency lists
  std::vector<Bitset> closed;           // closed neighborhoods as bitsets
  std::vector<int> order;               // assignment order (positions -> point)
  std::vector<std::vector<int>> earlier;  // per position: earlier neighbors

  explicit SearchGraph(const DigitalImage& X) {
    n = static_cast<int>(X.size());
    nbrs.resize(n);
    closed.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
      nbrs[i] = X.neighbor_indices(i);
      closed[i].set(i);
      for (int j : nbrs[i]) closed[i].set(j);
    }
    // Breadth-first assignment order from the lexicographically least root of
    // each component: every non-root point has an earlier neighbor.
    std::vector<char> seen(n, 0);
    order.reserve(n);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        const int v = order[head++];
        for (int w : nbrs[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
        }
      }
    }
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    earlier.resize(n);
    for (int k = 0; k < n; ++k) {
      for (int u : nbrs[order[k]]) {
        if (pos[u] < k) earlier[k].push_back(u);
      }
    }
  }
};

class Search {
 public:
  Search(ImagePtr X, const SearchGraph& g, const EnumerationConstraints& c,
         const MapVisitor& visit, std::uint64_t budget)
      : image_(std::move(X)), g_(g), c_(c), visit_(visit), budget_(budget) {
    const int n = g_.n;
    img_.assign(n, -1);
    cover_.assign(n, 0);
    uncovered_ = n;
    range_mask_.resize(n);
    range_mask_.set();
    if (c_.allowed_range) {
      range_mask_.reset();
      for (const Point& p : *c_.allowed_range) {
        const int i = image_->index_of(p);
        if (i < 0) {
          throw std::invalid_argument("enumerate_maps: allowed_range point not in X");
        }
        range_mask_.set(i);
      }
    }
    pinned_.assign(n, -1);
    for (const auto& [x, y] : c_.pinned) {
      const int i = image_->index_of(x);
      const int j = image_->index_of(y);
      if (i < 0 || j < 0) {
        throw std::invalid_argument("enumerate_maps: pinned pair not in X");
      }
      pinned_[i] = j;
    }
  }

  // root_filter, when set, restricts the candidates of position 0 (used by
  // the parallel partitioning).
  EnumerationResult run(const Bitset* root_filter = nullptr) {
    status_ = EnumerationStatus::Complete;
    nodes_ = 0;
    count_ = 0;
    if (g_.n == 0) {
      if (!c_.forbid_identity) count_ = 1;  // the empty map
      return {status_, count_, nodes_};
    }
    descend(0, root_filter);
    return {status_, count_, nodes_};
  }

 private:
  // Returns false to abort the whole search (budget or visitor stop).
  bool descend(int k, const Bitset* root_filter) {
    const int v = g_.order[k];
    Bitset cands = range_mask_;
    if (k == 0 && root_filter) cands &= *root_filter;
    if (pinned_[v] >= 0) {
      const bool ok = cands.test(pinned_[v]);
      cands.reset();
      if (ok) cands.set(pinned_[v]);
    }
    if (c_.require_continuous) {
      for (int u : g_.earlier[k]) cands &= g_.closed[img_[u]];
    }
    const int remaining_after = g_.n - k - 1;
    for (auto ci = cands.find_first(); ci != Bitset::npos;
         ci = cands.find_next(ci)) {
      if (++nodes_ > budget_) {
        status_ = EnumerationStatus::BudgetExceeded;
        return false;
      }
      const int c = static_cast<int>(ci);
      img_[v] = c;
      if (cover_[c]++ == 0) --uncovered_;
      bool keep_going = true;
      if (c_.require_onto && uncovered_ > remaining_after) {
        // Each remaining point can cover at most one missing value.
      } else if (k + 1 == g_.n) {
        keep_going = emit();
      } else {
        keep_going = descend(k + 1, root_filter);
      }
      if (--cover_[c] == 0) ++uncovered_;
      img_[v] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit() {
    if (c_.forbid_identity) {
      bool is_id = true;
      for (int i = 0; i < g_.n && is_id; ++i) is_id = (img_[i] == i);
      if (is_id) return true;
    }
    ++count_;
    if (visit_) {
      SelfMap m(image_, img_);
      if (!visit_(m)) {
        status_ = EnumerationStatus::StoppedByVisitor;
        return false;
      }
    }
    return true;
  }

  ImagePtr image_;
  const SearchGraph& g_;
  const EnumerationConstraints& c_;
  const MapVisitor& visit_;
  std::uint64_t budget_;

  std::vector<int> img_;
  std::vector<int> pinned_;
  std::vector<int> cover_;
  int uncovered_ = 0;
  Bitset range_mask_;

  EnumerationStatus status_ = EnumerationStatus::Complete;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

EnumerationResult enumerate_maps(ImagePtr X, const EnumerationConstraints& c,
                                 const MapVisitor& visit) {
  if (!X) throw std::invalid_argument("enumerate_maps: null image");
  SearchGraph g(*X);
  Search s(X, g, c, visit, c.node_budget);
  return s.run();
}

EnumerationResult enumerate_maps_parallel(ImagePtr X,
                                          const EnumerationConstraints& c,
                                          int jobs, const MapVisitor& visit) {
  if (jobs <= 1 || !X || X->size() < 2) return enumerate_maps(X, c, visit);
  SearchGraph g(*X);
  const int n = g.n;

  // Partition by the root point's candidate image, round-robin so load is
  // roughly even.
  std::vector<Bitset> parts;
  const int workers = std::min<int>(jobs, n);
  parts.assign(workers, Bitset(n));
  for (int i = 0; i < n; ++i) parts[i % workers].set(i);

  std::mutex emit_mutex;
  std::atomic<bool> stop{false};
  MapVisitor locked_visit;
  if (visit) {
    locked_visit = [&](const SelfMap& m) {
      std::lock_guard<std::mutex> lock(emit_mutex);
      if (stop.load()) return false;
      if (!visit(m)) {
        stop.store(true);
        return false;
      }
      return true;
    };
  }

  const std::uint64_t share = std::max<std::uint64_t>(1, c.node_budget / workers);
  std::vector<std::future<EnumerationResult>> futures;
  futures.reserve(parts.size());
  for (const Bitset& part : parts) {
    futures.push_back(std::async(std::launch::async, [&, part]() {
      Search s(X, g, c, locked_visit, share);
      return s.run(&part);
    }));
  }

  EnumerationResult total{EnumerationStatus::Complete, 0, 0};
  for (auto& f : futures) {
    const EnumerationResult r = f.get();
    total.count += r.count;
    total.nodes += r.nodes;
    if (r.status == EnumerationStatus::BudgetExceeded) {
      total.status = EnumerationStatus::BudgetExceeded;
    } else if (r.status == EnumerationStatus::StoppedByVisitor &&
               total.status == EnumerationStatus::Complete) {
      total.status = EnumerationStatus::StoppedByVisitor;
    }
  }
  return total;
}

}  // namespace digitop
