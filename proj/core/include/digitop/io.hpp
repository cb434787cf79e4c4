#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/selfmap.hpp"

namespace digitop {

// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// DIGIMG, line oriented, UTF-8:
//   digimg 1
//   dim <n>
//   adjacency c<u>
// or
//   adjacency np <u_1> ... <u_v>
//   factors <d_1> ... <d_v>        (np only; factor dims, summing to n)
// then one `point <x_1> ... <x_n>` line per point.
// Rejects duplicate points, wrong arity, u > n.
DigitalImage read_digimg(std::istream& in);
DigitalImage load_digimg(const std::string& path);
void write_digimg(std::ostream& out, const DigitalImage& X);
void save_digimg(const std::string& path, const DigitalImage& X);

// DIGMAP, line oriented:
//   digimap 1
//   dim <n>
//   map <x_1> ... <x_n> -> <y_1> ... <y_n>    (one line per domain point)
// Totality over the given domain is validated on load.
SelfMap read_digmap(std::istream& in, ImagePtr domain);
SelfMap load_digmap(const std::string& path, ImagePtr domain);
void write_digmap(std::ostream& out, const SelfMap& f);
void save_digmap(const std::string& path, const SelfMap& f);

// Point-set file: one `point <x_1> ... <x_n>` line per point, the same
// grammar as DIGIMG bodies. Blank lines and `#` comments are ignored.
std::vector<Point> read_point_set(std::istream& in, int dimension);
std::vector<Point> load_point_set(const std::string& path, int dimension);

}  // namespace digitop
