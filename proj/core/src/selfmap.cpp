#include "digitop/selfmap.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace digitop {

SelfMap::SelfMap(ImagePtr domain, std::vector<int> table)
    : domain_(std::move(domain)), table_(std::move(table)) {
  if (!domain_) throw std::invalid_argument("SelfMap: null domain");
  if (table_.size() != domain_->size()) {
    throw std::invalid_argument("SelfMap: table size != |X|");
  }
  const int n = static_cast<int>(domain_->size());
  for (int v : table_) {
    if (v < 0 || v >= n) throw std::invalid_argument("SelfMap: image out of range");
  }
}

SelfMap SelfMap::identity(ImagePtr domain) {
  std::vector<int> t(domain->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
  return SelfMap(std::move(domain), std::move(t));
}

SelfMap SelfMap::constant(ImagePtr domain, const Point& value) {
  const int j = domain->index_of(value);
  if (j < 0) throw std::invalid_argument("SelfMap::constant: value not in domain");
  std::vector<int> t(domain->size(), j);
  return SelfMap(std::move(domain), std::move(t));
}

SelfMap SelfMap::from_pairs(ImagePtr domain,
                            const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<int> t(domain->size(), -1);
  for (const auto& [x, y] : pairs) {
    const int i = domain->index_of(x);
    const int j = domain->index_of(y);
    if (i < 0 || j < 0) {
      throw std::invalid_argument("SelfMap::from_pairs: point outside domain");
    }
    if (t[i] >= 0) {
      throw std::invalid_argument("SelfMap::from_pairs: duplicate assignment for " +
                                  to_string(x));
    }
    t[i] = j;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) {
      throw std::invalid_argument("SelfMap::from_pairs: missing assignment for " +
                                  to_string(domain->point(static_cast<int>(i))));
    }
  }
  return SelfMap(std::move(domain), std::move(t));
}

const Point& SelfMap::apply(const Point& x) const {
  const int i = domain_->index_of(x);
  if (i < 0) throw std::invalid_argument("SelfMap::apply: point not in domain");
  return domain_->point(table_[i]);
}

bool SelfMap::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool SelfMap::operator==(const SelfMap& other) const {
  return *domain_ == *other.domain_ && table_ == other.table_;
}

std::string SelfMap::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) os << ' ';
    os << to_string(domain_->point(static_cast<int>(i))) << "->"
       << to_string(domain_->point(table_[i]));
  }
  return os.str();
}

ImageMap::ImageMap(ImagePtr source, ImagePtr target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (!source_ || !target_) throw std::invalid_argument("ImageMap: null image");
  if (table_.size() != source_->size()) {
    throw std::invalid_argument("ImageMap: table size != |source|");
  }
  const int n = static_cast<int>(target_->size());
  for (int v : table_) {
    if (v < 0 || v >= n) throw std::invalid_argument("ImageMap: image out of range");
  }
}

ImageMap ImageMap::from_pairs(ImagePtr source, ImagePtr target,
                              const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<int> t(source->size(), -1);
  for (const auto& [x, y] : pairs) {
    const int i = source->index_of(x);
    const int j = target->index_of(y);
    if (i < 0) throw std::invalid_argument("ImageMap: source point missing");
    if (j < 0) throw std::invalid_argument("ImageMap: target point missing");
    if (t[i] >= 0) throw std::invalid_argument("ImageMap: duplicate assignment");
    t[i] = j;
  }
  for (int v : t) {
    if (v < 0) throw std::invalid_argument("ImageMap: table not total");
  }
  return ImageMap(std::move(source), std::move(target), std::move(t));
}

const Point& ImageMap::apply(const Point& x) const {
  const int i = source_->index_of(x);
  if (i < 0) throw std::invalid_argument("ImageMap::apply: point not in source");
  return target_->point(table_[i]);
}

bool is_continuous(const SelfMap& f) {
  const DigitalImage& X = f.domain();
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) {
    for (int j : X.neighbor_indices(i)) {
      if (j <= i) continue;  // each edge once
      if (!X.adjacent_or_equal(f.apply_index(i), f.apply_index(j))) return false;
    }
  }
  return true;
}

bool is_continuous(const ImageMap& f) {
  const DigitalImage& X = f.source();
  const DigitalImage& Y = f.target();
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) {
    for (int j : X.neighbor_indices(i)) {
      if (j <= i) continue;
      const int fi = f.apply_index(i);
      const int fj = f.apply_index(j);
      if (fi != fj && !Y.adjacent(fi, fj)) return false;
    }
  }
  return true;
}

std::vector<Point> fixed_points(const SelfMap& f) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.apply_index(static_cast<int>(i)) == static_cast<int>(i)) {
      out.push_back(f.domain().point(static_cast<int>(i)));
    }
  }
  return out;
}

SelfMap compose(const SelfMap& f, const SelfMap& g) {
  if (!(f.domain() == g.domain())) {
    throw std::invalid_argument("compose: domain mismatch");
  }
  std::vector<int> t(f.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = f.apply_index(g.apply_index(static_cast<int>(i)));
  }
  return SelfMap(f.domain_ptr(), std::move(t));
}

OrbitResult iterate_orbit(const SelfMap& f, const Point& x, int cap) {
  const DigitalImage& X = f.domain();
  const int n = static_cast<int>(X.size());
  if (cap < n) {
    throw std::invalid_argument(
        "iterate_orbit: cap below |X| cannot guarantee cycle detection");
  }
  int cur = X.index_of(x);
  if (cur < 0) throw std::invalid_argument("iterate_orbit: point not in domain");
  std::vector<int> first_seen(n, -1);
  int step = 0;
  while (first_seen[cur] < 0) {
    first_seen[cur] = step;
    cur = f.apply_index(cur);
    ++step;
  }
  const int entry = first_seen[cur];
  const int cycle_length = step - entry;
  OrbitResult r;
  r.cycle_length = cycle_length;
  r.eventually_fixed = (cycle_length == 1);
  r.eventual = X.point(cur);
  r.steps = entry;
  return r;
}

bool is_isomorphism(const ImageMap& F) {
  if (F.source().size() != F.target().size()) return false;
  std::vector<char> hit(F.target().size(), 0);
  for (std::size_t i = 0; i < F.source().size(); ++i) {
    const int j = F.apply_index(static_cast<int>(i));
    if (hit[j]) return false;  // not injective
    hit[j] = 1;
  }
  if (!is_continuous(F)) return false;
  // Inverse continuity: pull each target edge back and require the preimages
  // to be adjacent or equal in the source.
  std::vector<int> inv(F.target().size());
  for (std::size_t i = 0; i < F.source().size(); ++i) {
    inv[F.apply_index(static_cast<int>(i))] = static_cast<int>(i);
  }
  const DigitalImage& Y = F.target();
  for (std::size_t j = 0; j < Y.size(); ++j) {
    for (int k : Y.neighbor_indices(static_cast<int>(j))) {
      if (k <= static_cast<int>(j)) continue;
      if (!F.source().adjacent_or_equal(inv[j], inv[k])) return false;
    }
  }
  return true;
}

bool is_retraction(const SelfMap& r, const std::vector<Point>& Xprime) {
  const DigitalImage& X = r.domain();
  std::set<int> prime;
  for (const Point& p : Xprime) {
    const int i = X.index_of(p);
    if (i < 0) {
      throw std::invalid_argument("is_retraction: Xprime not a subset of X");
    }
    prime.insert(i);
  }
  for (int i : prime) {
    if (r.apply_index(i) != i) return false;  // must fix Xprime pointwise
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!prime.count(r.apply_index(static_cast<int>(i)))) return false;
  }
  return is_continuous(r);
}

bool is_onto(const SelfMap& f) {
  std::vector<char> hit(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) hit[f.apply_index(static_cast<int>(i))] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool visit_all_self_maps(ImagePtr X, const std::function<bool(const SelfMap&)>& fn) {
  const int n = static_cast<int>(X->size());
  std::vector<int> table(n, 0);
  while (true) {
    if (!fn(SelfMap(X, table))) return false;
    int k = n - 1;
    while (k >= 0 && table[k] == n - 1) table[k--] = 0;
    if (k < 0) return true;
    ++table[k];
  }
}

}  // namespace digitop
