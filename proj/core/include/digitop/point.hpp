#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace digitop {

// A lattice point in Z^n. Lexicographic order on the coordinate vector is
// the canonical order used for every deterministic, set-valued result.
struct Point {
  std::vector<std::int64_t> coords;

  Point() = default;
  Point(std::initializer_list<std::int64_t> cs) : coords(cs) {}
  explicit Point(std::vector<std::int64_t> cs) : coords(std::move(cs)) {}

  int dimension() const { return static_cast<int>(coords.size()); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }

  auto operator<=>(const Point&) const = default;
};

std::string to_string(const Point& p);

}  // namespace digitop
