#include "digitop/metric.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace digitop {

Dist Dist::integer(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Dist::integer: negative");
  Dist d;
  d.kind_ = Kind::Int;
  d.raw_ = n;
  return d;
}

Dist Dist::sqrt_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Dist::sqrt_int: negative");
  // Perfect squares collapse to the integer kind so 1-D l2 distances and the
  // like stay plain integers.
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::int64_t r = std::max<std::int64_t>(0, root - 1); r <= root + 1; ++r) {
    if (r * r == n) return integer(r);
  }
  Dist d;
  d.kind_ = Kind::SqrtInt;
  d.raw_ = n;
  return d;
}

Dist Dist::real(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("Dist::real: negative or NaN");
  Dist d;
  d.kind_ = Kind::Real;
  d.real_ = v;
  return d;
}

double Dist::value() const {
  switch (kind_) {
    case Kind::Int: return static_cast<double>(raw_);
    case Kind::SqrtInt: return std::sqrt(static_cast<double>(raw_));
    case Kind::Real: return real_;
  }
  return 0.0;
}

bool Dist::is_zero() const {
  // Distances between distinct lattice points are >= 1 under every metric in
  // scope, so a Real value below the tolerance can only be an exact zero.
  if (kind_ == Kind::Real) return real_ <= kFloatTolerance;
  return raw_ == 0;
}

Rational Dist::squared() const {
  switch (kind_) {
    case Kind::Int: return Rational(raw_) * raw_;
    case Kind::SqrtInt: return Rational(raw_);
    case Kind::Real:
      throw std::logic_error("Dist::squared on an inexact distance");
  }
  return Rational(0);
}

Cmp compare(const Dist& a, const Dist& b) {
  if (a.kind_ != Dist::Kind::Real && b.kind_ != Dist::Kind::Real) {
    // exact kinds: compare squares; __int128 keeps the hot path allocation-free
    const auto sq = [](const Dist& d) -> __int128 {
      return d.kind_ == Dist::Kind::Int
                 ? static_cast<__int128>(d.raw_) * d.raw_
                 : static_cast<__int128>(d.raw_);
    };
    const __int128 lhs = sq(a);
    const __int128 rhs = sq(b);
    if (lhs < rhs) return Cmp::Less;
    if (lhs > rhs) return Cmp::Greater;
    return Cmp::Equal;
  }
  const double x = a.value();
  const double y = b.value();
  if (std::abs(x - y) <= kFloatTolerance) {
    return x == y ? Cmp::Equal : Cmp::Indeterminate;
  }
  return x < y ? Cmp::Less : Cmp::Greater;
}

Cmp compare_scaled(const Dist& a, const Rational& q, const Dist& b) {
  if (q < 0) throw std::invalid_argument("compare_scaled: negative scale");
  if (a.kind() != Dist::Kind::Real && b.kind() != Dist::Kind::Real) {
    // a ? q*b with both sides non-negative: compare squares exactly.
    const Rational lhs = a.squared();
    const Rational rhs = q * q * b.squared();
    if (lhs < rhs) return Cmp::Less;
    if (lhs > rhs) return Cmp::Greater;
    return Cmp::Equal;
  }
  const double x = a.value();
  const double y = static_cast<double>(q) * b.value();
  if (std::abs(x - y) <= kFloatTolerance) {
    return x == y ? Cmp::Equal : Cmp::Indeterminate;
  }
  return x < y ? Cmp::Less : Cmp::Greater;
}

bool leq_scaled(const Dist& a, const Rational& q, const Dist& b) {
  const Cmp c = compare_scaled(a, q, b);
  return c == Cmp::Less || c == Cmp::Equal;
}

Dist lp_distance(const Point& x, const Point& y, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_distance: p must be > 0");
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("lp_distance: dimension mismatch");
  }
  if (p == 1.0) {
    std::int64_t sum = 0;
    for (int i = 0; i < x.dimension(); ++i) {
      sum += std::abs(x.coords[i] - y.coords[i]);
    }
    return Dist::integer(sum);
  }
  if (p == 2.0) {
    std::int64_t sum = 0;
    for (int i = 0; i < x.dimension(); ++i) {
      const std::int64_t d = x.coords[i] - y.coords[i];
      sum += d * d;
    }
    return Dist::sqrt_int(sum);
  }
  double sum = 0.0;
  for (int i = 0; i < x.dimension(); ++i) {
    sum += std::pow(std::abs(static_cast<double>(x.coords[i] - y.coords[i])), p);
  }
  if (sum == 0.0) return Dist::integer(0);  // x == y: keep zero exact
  return Dist::real(std::pow(sum, 1.0 / p));
}

// ---------------------------------------------------------------------------
// Metric

Metric Metric::lp(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("Metric::lp: p must be > 0");
  Metric m;
  m.p_ = p;
  return m;
}

Metric Metric::shortest_path(ImagePtr X) {
  if (!X || X->empty()) {
    throw std::invalid_argument("shortest-path metric: empty image");
  }
  const std::size_t n = X->size();
  auto table = std::make_shared<std::vector<std::vector<int>>>(
      n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = (*table)[s];
    std::deque<int> queue;
    row[s] = 0;
    queue.push_back(static_cast<int>(s));
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : X->neighbor_indices(v)) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int dv : row) {
      if (dv < 0) {
        // Mirrors the defining restriction: path length is undefined across
        // components.
        throw std::invalid_argument(
            "shortest-path metric undefined on a disconnected image");
      }
    }
  }
  Metric m;
  m.image_ = std::move(X);
  m.table_ = std::move(table);
  return m;
}

bool Metric::exact() const {
  return is_shortest_path() || p_ == 1.0 || p_ == 2.0;
}

Dist Metric::distance(const Point& x, const Point& y) const {
  if (is_lp()) return lp_distance(x, y, p_);
  const int i = image_->index_of(x);
  const int j = image_->index_of(y);
  if (i < 0 || j < 0) {
    throw std::invalid_argument("shortest-path metric: point outside domain");
  }
  return Dist::integer((*table_)[i][j]);
}

int Metric::path_length(int i, int j) const {
  if (!table_) throw std::logic_error("path_length on an lp metric");
  return (*table_)[i][j];
}

const DigitalImage& Metric::domain() const {
  if (!image_) throw std::logic_error("domain on an lp metric");
  return *image_;
}

std::string Metric::selector() const {
  if (is_shortest_path()) return "spath";
  std::ostringstream os;
  os << "lp:" << p_;
  return os.str();
}

Metric Metric::from_selector(const std::string& s, ImagePtr for_spath) {
  if (s == "spath") {
    if (!for_spath) {
      throw std::invalid_argument("metric selector 'spath' needs an image");
    }
    return shortest_path(std::move(for_spath));
  }
  if (s.rfind("lp:", 0) == 0) {
    std::size_t used = 0;
    double p = 0.0;
    const std::string body = s.substr(3);
    try {
      p = std::stod(body, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad metric selector: " + s);
    }
    if (used != body.size() || !(p > 0.0)) {
      throw std::invalid_argument("bad metric selector: " + s);
    }
    return lp(p);
  }
  throw std::invalid_argument("unknown metric selector: " + s);
}

Metric build_shortest_path_metric(ImagePtr X) {
  return Metric::shortest_path(std::move(X));
}

Dist diameter(const DigitalImage& X, const Metric& d) {
  if (X.empty()) throw std::invalid_argument("diameter: empty image");
  Dist best = Dist::integer(0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Dist dij = d.distance(X.point(static_cast<int>(i)), X.point(static_cast<int>(j)));
      if (compare(dij, best) == Cmp::Greater) best = dij;
    }
  }
  return best;
}

Dist min_positive_distance(const DigitalImage& X, const Metric& d) {
  if (X.size() < 2) {
    throw std::invalid_argument("min_positive_distance: needs >= 2 points");
  }
  std::optional<Dist> best;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Dist dij = d.distance(X.point(static_cast<int>(i)), X.point(static_cast<int>(j)));
      if (!best || compare(dij, *best) == Cmp::Less) best = dij;
    }
  }
  return *best;
}

SequenceVerdict analyze_sequence(const std::vector<Point>& prefix, const Metric& d) {
  if (prefix.empty()) {
    throw std::invalid_argument("analyze_sequence: empty prefix");
  }
  for (const Point& p : prefix) {
    // Point-membership validation; cheapest uniform check is a distance to
    // itself, which throws for points outside a shortest-path domain.
    (void)d.distance(p, p);
  }
  const std::size_t n = prefix.size();
  if (n == 1) {
    return {SequenceVerdict::Status::Inconclusive, std::nullopt};
  }
  // Smallest m whose (non-empty) tail is constant at prefix[m].
  std::size_t m = n - 1;
  while (m > 0 && prefix[m - 1] == prefix[n - 1]) --m;
  if (m == n - 1) {
    return {SequenceVerdict::Status::NotConstantWithinPrefix, std::nullopt};
  }
  return {SequenceVerdict::Status::EventuallyConstant, m};
}

std::string to_string(SequenceVerdict::Status s) {
  switch (s) {
    case SequenceVerdict::Status::EventuallyConstant: return "EVENTUALLY_CONSTANT";
    case SequenceVerdict::Status::NotConstantWithinPrefix:
      return "NOT_CONSTANT_WITHIN_PREFIX";
    case SequenceVerdict::Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace digitop
