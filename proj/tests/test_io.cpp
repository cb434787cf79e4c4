#include <doctest.h>

#include <sstream>

#include "digitop/io.hpp"
#include "support/oracle.hpp"

using namespace digitop;

namespace {

DigitalImage parse_img(const std::string& text) {
  std::istringstream in(text);
  return read_digimg(in);
}

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_digimg(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("digimg round trip") {
  for (const DigitalImage& X :
       {rectangle({2, 2}, Adjacency::cu(1)), rectangle({3}, Adjacency::cu(1)),
        product({rectangle({1}, Adjacency::cu(1)), rectangle({2}, Adjacency::cu(1))})}) {
    std::ostringstream out;
    write_digimg(out, X);
    CHECK(parse_img(out.str()) == X);
  }
}

TEST_CASE("digimg parses the documented grammar") {
  const DigitalImage X = parse_img(
      "digimg 1\n"
      "dim 2\n"
      "adjacency c2\n"
      "# a comment\n"
      "point 0 0\n"
      "point 0 1\n");
  CHECK(X.dimension() == 2);
  CHECK(X.size() == 2);
  CHECK(X.adjacency() == Adjacency::cu(2));
}

TEST_CASE("digimg rejects malformed input with line numbers") {
  CHECK(parse_error_line("digimg 2\ndim 1\nadjacency c1\n") == 1);
  CHECK(parse_error_line("digimg 1\ndim 0\nadjacency c1\n") == 2);
  CHECK(parse_error_line("digimg 1\ndim 1\nadjacency c2\n") == 3);  // u > n
  CHECK(parse_error_line("digimg 1\ndim 2\nadjacency c1\npoint 0\n") == 4);
  CHECK(parse_error_line(
            "digimg 1\ndim 1\nadjacency c1\npoint 0\npoint 0\n") == 5);
  CHECK(parse_error_line("digimg 1\ndim 1\nadjacency c1\npoint x\n") == 4);
  CHECK(parse_error_line("digimg 1\ndim 2\nadjacency np 1 1\npoint 0 0\n") == 4);
  CHECK(parse_error_line(
            "digimg 1\ndim 2\nadjacency np 1 1\nfactors 1 2\npoint 0 0\n") == 4);
}

TEST_CASE("np adjacency file form") {
  const DigitalImage X = parse_img(
      "digimg 1\n"
      "dim 2\n"
      "adjacency np 1 1\n"
      "factors 1 1\n"
      "point 0 0\npoint 0 1\npoint 1 0\npoint 1 1\n");
  CHECK(X.adjacency().kind() == Adjacency::Kind::NormalProduct);
  CHECK(X.adjacent(Point{0, 0}, Point{1, 1}));
}

TEST_CASE("digmap round trip and validation") {
  auto X = oracle::interval(0, 2);
  const SelfMap f = SelfMap::from_pairs(
      X, {{Point{0}, Point{0}}, {Point{1}, Point{0}}, {Point{2}, Point{1}}});
  std::ostringstream out;
  write_digmap(out, f);
  std::istringstream in(out.str());
  CHECK(read_digmap(in, X) == f);

  auto bad = [&](const std::string& text) {
    std::istringstream is(text);
    try {
      read_digmap(is, X);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(bad("digimap 1\ndim 2\n") == 2);  // wrong dimension
  CHECK(bad("digimap 1\ndim 1\nmap 0 -> 5\n") == 3);  // image outside domain
  CHECK(bad("digimap 1\ndim 1\nmap 0 -> 0\nmap 0 -> 1\n") == 4);  // duplicate
  // totality: missing rows reported at end of input
  CHECK(bad("digimap 1\ndim 1\nmap 0 -> 0\n") == 3);
}

TEST_CASE("point set files") {
  std::istringstream in("point 0 0\npoint 1 1\n");
  const auto pts = read_point_set(in, 2);
  CHECK(pts == std::vector<Point>{Point{0, 0}, Point{1, 1}});

  std::istringstream bad("point 0\n");
  CHECK_THROWS_AS(read_point_set(bad, 2), ParseError);
}
