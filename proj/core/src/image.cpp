#include "digitop/image.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace digitop {

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) os << ',';
    os << p.coords[i];
  }
  os << ')';
  return os.str();
}

bool cu_adjacent(const Point& x, const Point& y, int u) {
  const int n = x.dimension();
  if (y.dimension() != n) {
    throw std::invalid_argument("cu_adjacent: dimension mismatch");
  }
  if (u < 1 || u > n) {
    throw std::invalid_argument("cu_adjacent: u out of range [1, n]");
  }
  int diff_by_one = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = x.coords[i] - y.coords[i];
    if (d == 0) continue;
    if (d == 1 || d == -1) {
      ++diff_by_one;
    } else {
      return false;  // some index differs but not by exactly 1
    }
  }
  return diff_by_one >= 1 && diff_by_one <= u;
}

// ---------------------------------------------------------------------------
// Adjacency

Adjacency Adjacency::cu(int u) {
  if (u < 1) throw std::invalid_argument("Adjacency::cu: u must be >= 1");
  Adjacency a;
  a.kind_ = Kind::CU;
  a.u_ = u;
  return a;
}

Adjacency Adjacency::normal_product(std::vector<Adjacency> factors,
                                    std::vector<int> factor_dims) {
  if (factors.size() < 2) {
    throw std::invalid_argument("normal_product: needs >= 2 factors");
  }
  if (factors.size() != factor_dims.size()) {
    throw std::invalid_argument("normal_product: arity mismatch");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factor_dims[i] < 1) {
      throw std::invalid_argument("normal_product: factor dimension must be >= 1");
    }
    factors[i].validate_for_dimension(factor_dims[i]);
  }
  Adjacency a;
  a.kind_ = Kind::NormalProduct;
  a.factors_ = std::move(factors);
  a.factor_dims_ = std::move(factor_dims);
  return a;
}

int Adjacency::u() const {
  if (kind_ != Kind::CU) throw std::logic_error("Adjacency::u on non-CU relation");
  return u_;
}

const std::vector<Adjacency>& Adjacency::factors() const {
  if (kind_ != Kind::NormalProduct) {
    throw std::logic_error("Adjacency::factors on non-product relation");
  }
  return factors_;
}

const std::vector<int>& Adjacency::factor_dims() const {
  if (kind_ != Kind::NormalProduct) {
    throw std::logic_error("Adjacency::factor_dims on non-product relation");
  }
  return factor_dims_;
}

int Adjacency::arity() const { return static_cast<int>(factors().size()); }

int Adjacency::product_dimension() const {
  if (kind_ == Kind::CU) return 0;
  return std::accumulate(factor_dims_.begin(), factor_dims_.end(), 0);
}

void Adjacency::validate_for_dimension(int n) const {
  if (kind_ == Kind::CU) {
    if (u_ > n) {
      throw std::invalid_argument("adjacency c" + std::to_string(u_) +
                                  " invalid for dimension " + std::to_string(n));
    }
    return;
  }
  if (product_dimension() != n) {
    throw std::invalid_argument("normal-product adjacency spans dimension " +
                                std::to_string(product_dimension()) +
                                ", image has dimension " + std::to_string(n));
  }
}

namespace {

Point slice(const Point& p, int offset, int width) {
  Point q;
  q.coords.assign(p.coords.begin() + offset, p.coords.begin() + offset + width);
  return q;
}

}  // namespace

bool Adjacency::adjacent(const Point& a, const Point& b) const {
  if (a == b) return false;
  if (kind_ == Kind::CU) return cu_adjacent(a, b, u_);
  // Normal product: every factor projection pair equal or factor-adjacent.
  int offset = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int w = factor_dims_[i];
    const Point pa = slice(a, offset, w);
    const Point pb = slice(b, offset, w);
    if (pa != pb && !factors_[i].adjacent(pa, pb)) return false;
    offset += w;
  }
  return true;
}

bool Adjacency::adjacent_or_equal(const Point& a, const Point& b) const {
  return a == b || adjacent(a, b);
}

std::string Adjacency::describe() const {
  if (kind_ == Kind::CU) return "c" + std::to_string(u_);
  std::string s = "np(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += factors_[i].describe();
  }
  s += ')';
  return s;
}

bool Adjacency::operator==(const Adjacency& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::CU) return u_ == other.u_;
  return factors_ == other.factors_ && factor_dims_ == other.factor_dims_;
}

// ---------------------------------------------------------------------------
// DigitalImage

DigitalImage::DigitalImage(int dimension, std::vector<Point> points,
                           Adjacency adjacency)
    : dimension_(dimension),
      points_(std::move(points)),
      adjacency_(std::move(adjacency)) {
  if (dimension_ < 1 || dimension_ > kMaxDimension) {
    throw std::invalid_argument("image dimension must be in [1, 8]");
  }
  if (points_.size() > kMaxPoints) {
    throw std::invalid_argument("image exceeds the point-count cap");
  }
  for (const Point& p : points_) {
    if (p.dimension() != dimension_) {
      throw std::invalid_argument("point " + to_string(p) +
                                  " does not match image dimension");
    }
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("duplicate point in image");
  }
  adjacency_.validate_for_dimension(dimension_);
}

bool DigitalImage::contains(const Point& p) const { return index_of(p) >= 0; }

int DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

bool DigitalImage::adjacent(const Point& a, const Point& b) const {
  return adjacency_.adjacent(a, b);
}

bool DigitalImage::adjacent(int i, int j) const {
  return adjacency_.adjacent(points_[i], points_[j]);
}

bool DigitalImage::adjacent_or_equal(int i, int j) const {
  return i == j || adjacent(i, j);
}

std::vector<int> DigitalImage::neighbor_indices(int i) const {
  // Every supported relation moves each coordinate by at most 1, so probing
  // the Chebyshev-1 shell and filtering by the relation is exact.
  std::vector<int> out;
  const Point& x = points_[i];
  Point y = x;
  // odometer over deltas in {-1,0,1}^n, skipping the zero vector
  std::vector<int> delta(dimension_, -1);
  while (true) {
    bool all_zero = true;
    for (int k = 0; k < dimension_; ++k) {
      y.coords[k] = x.coords[k] + delta[k];
      if (delta[k] != 0) all_zero = false;
    }
    if (!all_zero) {
      const int j = index_of(y);
      if (j >= 0 && adjacency_.adjacent(x, y)) out.push_back(j);
    }
    int k = 0;
    while (k < dimension_ && delta[k] == 1) delta[k++] = -1;
    if (k == dimension_) break;
    ++delta[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DigitalImage::operator==(const DigitalImage& other) const {
  return dimension_ == other.dimension_ && points_ == other.points_ &&
         adjacency_ == other.adjacency_;
}

std::vector<Point> neighbors(const DigitalImage& X, const Point& x) {
  const int i = X.index_of(x);
  if (i < 0) throw std::invalid_argument("neighbors: point not in image");
  std::vector<Point> out;
  for (int j : X.neighbor_indices(i)) out.push_back(X.point(j));
  return out;
}

namespace {

// BFS distances from source index; -1 marks unreached.
std::vector<int> bfs_distances(const DigitalImage& X, int source) {
  std::vector<int> dist(X.size(), -1);
  std::deque<int> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : X.neighbor_indices(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const DigitalImage& X) {
  if (X.empty()) throw std::invalid_argument("is_connected: empty image");
  const auto dist = bfs_distances(X, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<Point>> find_path(const DigitalImage& X,
                                            const Point& x, const Point& y) {
  const int xi = X.index_of(x);
  const int yi = X.index_of(y);
  if (xi < 0 || yi < 0) {
    throw std::invalid_argument("find_path: endpoint not in image");
  }
  const auto dist_to_y = bfs_distances(X, yi);
  if (dist_to_y[xi] < 0) return std::nullopt;
  std::vector<Point> path;
  int cur = xi;
  path.push_back(X.point(cur));
  while (cur != yi) {
    // neighbor_indices is sorted, so the first strict-descent neighbor is the
    // lexicographically least successor.
    for (int w : X.neighbor_indices(cur)) {
      if (dist_to_y[w] == dist_to_y[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(X.point(cur));
  }
  return path;
}

std::vector<Point> boundary(int dimension, const std::vector<Point>& pts) {
  std::set<Point> inside(pts.begin(), pts.end());
  std::vector<Point> out;
  for (const Point& p : inside) {
    bool on_boundary = false;
    for (int k = 0; k < dimension && !on_boundary; ++k) {
      for (int step : {-1, 1}) {
        Point q = p;
        q.coords[k] += step;
        if (!inside.count(q)) {
          on_boundary = true;
          break;
        }
      }
    }
    if (on_boundary) out.push_back(p);
  }
  return out;  // set iteration is already lexicographic
}

std::vector<Point> boundary(const DigitalImage& X) {
  return boundary(X.dimension(), X.points());
}

DigitalImage rectangle(const std::vector<std::int64_t>& extents) {
  return rectangle(extents, Adjacency::cu(static_cast<int>(extents.size())));
}

DigitalImage rectangle(const std::vector<std::int64_t>& extents, Adjacency adjacency) {
  const int n = static_cast<int>(extents.size());
  if (n < 1) throw std::invalid_argument("rectangle: needs >= 1 extent");
  for (std::int64_t m : extents) {
    if (m < 0) throw std::invalid_argument("rectangle: negative extent");
  }
  std::vector<Point> pts;
  Point cur;
  cur.coords.assign(n, 0);
  while (true) {
    pts.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur.coords[k] == extents[k]) cur.coords[k--] = 0;
    if (k < 0) break;
    ++cur.coords[k];
  }
  return DigitalImage(n, std::move(pts), std::move(adjacency));
}

DigitalImage product(const std::vector<DigitalImage>& factors) {
  if (factors.size() < 2) throw std::invalid_argument("product: needs >= 2 factors");
  std::vector<Adjacency> adjs;
  std::vector<int> dims;
  int n = 0;
  for (const DigitalImage& f : factors) {
    if (f.empty()) throw std::invalid_argument("product: empty factor");
    adjs.push_back(f.adjacency());
    dims.push_back(f.dimension());
    n += f.dimension();
  }
  std::vector<Point> pts;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    Point p;
    p.coords.reserve(n);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Point& fp = factors[i].point(static_cast<int>(idx[i]));
      p.coords.insert(p.coords.end(), fp.coords.begin(), fp.coords.end());
    }
    pts.push_back(std::move(p));
    int k = static_cast<int>(factors.size()) - 1;
    while (k >= 0 && idx[k] + 1 == factors[k].size()) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return DigitalImage(n, std::move(pts),
                      Adjacency::normal_product(std::move(adjs), std::move(dims)));
}

namespace {

int factor_offset(const Adjacency& adj, int i) {
  const auto& dims = adj.factor_dims();
  if (i < 0 || i >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("projection: factor index out of range");
  }
  int offset = 0;
  for (int k = 0; k < i; ++k) offset += dims[k];
  return offset;
}

}  // namespace

Point project_point(const DigitalImage& X, const Point& p, int i) {
  if (X.adjacency().kind() != Adjacency::Kind::NormalProduct) {
    throw std::invalid_argument("projection: image is not a product");
  }
  const int offset = factor_offset(X.adjacency(), i);
  const int w = X.adjacency().factor_dims()[i];
  return slice(p, offset, w);
}

DigitalImage projection(const DigitalImage& X, int i) {
  if (X.adjacency().kind() != Adjacency::Kind::NormalProduct) {
    throw std::invalid_argument("projection: image is not a product");
  }
  const int w = X.adjacency().factor_dims()[i];
  std::set<Point> pts;
  for (const Point& p : X.points()) pts.insert(project_point(X, p, i));
  return DigitalImage(w, std::vector<Point>(pts.begin(), pts.end()),
                      X.adjacency().factors()[i]);
}

}  // namespace digitop
