#include "digitop/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace digitop {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next meaningful line (skips blanks and # comments); false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_no == 0 ? 1 : line_no, what);
  }
};

std::int64_t parse_int(const LineReader& r, const std::string& tok) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(r.line_no, "expected integer, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(r.line_no, "expected integer, got '" + tok + "'");
  }
  return v;
}

Point parse_point_line(const LineReader& r, const std::vector<std::string>& tokens,
                       int dimension) {
  if (static_cast<int>(tokens.size()) != dimension + 1) {
    throw ParseError(r.line_no, "point line has wrong arity (dim " +
                                    std::to_string(dimension) + ")");
  }
  Point p;
  p.coords.reserve(dimension);
  for (int i = 1; i <= dimension; ++i) p.coords.push_back(parse_int(r, tokens[i]));
  return p;
}

}  // namespace

DigitalImage read_digimg(std::istream& in) {
  LineReader r{in};
  std::vector<std::string> tok;

  if (!r.next(tok) || tok.size() != 2 || tok[0] != "digimg" || tok[1] != "1") {
    r.fail("expected header 'digimg 1'");
  }
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "dim") {
    r.fail("expected 'dim <n>'");
  }
  const int n = static_cast<int>(parse_int(r, tok[1]));
  if (n < 1 || n > DigitalImage::kMaxDimension) r.fail("dimension out of range");

  if (!r.next(tok) || tok.empty() || tok[0] != "adjacency") {
    r.fail("expected 'adjacency ...'");
  }
  Adjacency adj = Adjacency::cu(1);
  if (tok.size() == 2 && tok[1].size() >= 2 && tok[1][0] == 'c') {
    const int u = static_cast<int>(parse_int(r, tok[1].substr(1)));
    if (u < 1 || u > n) r.fail("adjacency c" + std::to_string(u) + " needs 1 <= u <= dim");
    adj = Adjacency::cu(u);
  } else if (tok.size() >= 3 && tok[1] == "np") {
    std::vector<Adjacency> factors;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      factors.push_back(Adjacency::cu(static_cast<int>(parse_int(r, tok[i]))));
    }
    if (!r.next(tok) || tok.empty() || tok[0] != "factors" ||
        tok.size() != factors.size() + 1) {
      r.fail("normal-product adjacency needs a matching 'factors <d_1> ...' line");
    }
    std::vector<int> dims;
    int total = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      dims.push_back(static_cast<int>(parse_int(r, tok[i])));
      total += dims.back();
    }
    if (total != n) r.fail("factor dimensions must sum to dim");
    try {
      adj = Adjacency::normal_product(std::move(factors), std::move(dims));
    } catch (const std::invalid_argument& e) {
      r.fail(e.what());
    }
  } else {
    r.fail("bad adjacency line; expected 'c<u>' or 'np <u_1> ...'");
  }

  std::vector<Point> pts;
  std::set<Point> seen;
  while (r.next(tok)) {
    if (tok[0] != "point") r.fail("expected 'point <coords>' line");
    pts.push_back(parse_point_line(r, tok, n));
    if (!seen.insert(pts.back()).second) {
      r.fail("duplicate point " + to_string(pts.back()));
    }
  }
  try {
    return DigitalImage(n, std::move(pts), std::move(adj));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

DigitalImage load_digimg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_digimg(in);
}

void write_digimg(std::ostream& out, const DigitalImage& X) {
  out << "digimg 1\n";
  out << "dim " << X.dimension() << "\n";
  const Adjacency& a = X.adjacency();
  if (a.kind() == Adjacency::Kind::CU) {
    out << "adjacency c" << a.u() << "\n";
  } else {
    out << "adjacency np";
    for (const Adjacency& f : a.factors()) {
      if (f.kind() != Adjacency::Kind::CU) {
        throw std::invalid_argument(
            "write_digimg: nested normal products are not representable");
      }
      out << ' ' << f.u();
    }
    out << "\nfactors";
    for (int d : a.factor_dims()) out << ' ' << d;
    out << "\n";
  }
  for (const Point& p : X.points()) {
    out << "point";
    for (std::int64_t c : p.coords) out << ' ' << c;
    out << "\n";
  }
}

void save_digimg(const std::string& path, const DigitalImage& X) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_digimg(out, X);
}

SelfMap read_digmap(std::istream& in, ImagePtr domain) {
  LineReader r{in};
  std::vector<std::string> tok;
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "digimap" || tok[1] != "1") {
    r.fail("expected header 'digimap 1'");
  }
  if (!r.next(tok) || tok.size() != 2 || tok[0] != "dim") {
    r.fail("expected 'dim <n>'");
  }
  const int n = static_cast<int>(parse_int(r, tok[1]));
  if (n != domain->dimension()) r.fail("map dimension does not match domain");

  std::vector<int> table(domain->size(), -1);
  while (r.next(tok)) {
    if (tok[0] != "map" || static_cast<int>(tok.size()) != 2 * n + 2 ||
        tok[n + 1] != "->") {
      r.fail("expected 'map <x_1> ... <x_n> -> <y_1> ... <y_n>'");
    }
    Point x, y;
    for (int i = 1; i <= n; ++i) x.coords.push_back(parse_int(r, tok[i]));
    for (int i = n + 2; i <= 2 * n + 1; ++i) y.coords.push_back(parse_int(r, tok[i]));
    const int xi = domain->index_of(x);
    const int yi = domain->index_of(y);
    if (xi < 0) r.fail("map source " + to_string(x) + " not in domain");
    if (yi < 0) r.fail("map image " + to_string(y) + " not in domain");
    if (table[xi] >= 0) r.fail("duplicate map line for " + to_string(x));
    table[xi] = yi;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0) {
      r.fail("map not total: missing " +
             to_string(domain->point(static_cast<int>(i))));
    }
  }
  return SelfMap(std::move(domain), std::move(table));
}

SelfMap load_digmap(const std::string& path, ImagePtr domain) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_digmap(in, std::move(domain));
}

void write_digmap(std::ostream& out, const SelfMap& f) {
  out << "digimap 1\n";
  out << "dim " << f.domain().dimension() << "\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point& x = f.domain().point(static_cast<int>(i));
    const Point& y = f.domain().point(f.apply_index(static_cast<int>(i)));
    out << "map";
    for (std::int64_t c : x.coords) out << ' ' << c;
    out << " ->";
    for (std::int64_t c : y.coords) out << ' ' << c;
    out << "\n";
  }
}

void save_digmap(const std::string& path, const SelfMap& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_digmap(out, f);
}

std::vector<Point> read_point_set(std::istream& in, int dimension) {
  LineReader r{in};
  std::vector<std::string> tok;
  std::vector<Point> pts;
  while (r.next(tok)) {
    if (tok[0] != "point") r.fail("expected 'point <coords>' line");
    pts.push_back(parse_point_line(r, tok, dimension));
  }
  return pts;
}

std::vector<Point> load_point_set(const std::string& path, int dimension) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_point_set(in, dimension);
}

}  // namespace digitop
