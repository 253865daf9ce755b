#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/geometry.hpp"
#include "maxcross/graph.hpp"

namespace maxcross::io {

// "regular-graph v1"
//   regular-graph v1
//   <n> <d>
//   <u> <v>            nd/2 lines, u < v, sorted

inline void write_graph(std::ostream& os, const RegularGraph& g) {
  os << "regular-graph v1\n" << g.order() << ' ' << g.degree() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline std::string to_graph_text(const RegularGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next line that is not a '#' comment; throws at end of input.
  std::string next(const char* what) {
    std::string line;
    while (std::getline(is_, line)) {
      ++number_;
      if (!line.empty() && line[0] == '#') {
        comments_.push_back(line);
        continue;
      }
      return line;
    }
    throw FormatError(std::string("unexpected end of input, expected ") + what);
  }

  // Remaining lines must be blank or comments.
  void finish() {
    std::string line;
    while (std::getline(is_, line)) {
      ++number_;
      if (line.empty()) continue;
      if (line[0] == '#') {
        comments_.push_back(line);
        continue;
      }
      fail("trailing content");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError("line " + std::to_string(number_) + ": " + message);
  }

  const std::vector<std::string>& comments() const { return comments_; }

 private:
  std::istream& is_;
  std::size_t number_ = 0;
  std::vector<std::string> comments_;
};

template <class... T>
void parse_fields(LineReader& reader, const std::string& line, T&... fields) {
  std::istringstream ls(line);
  if (!(ls >> ... >> fields)) reader.fail("malformed line '" + line + "'");
  std::string extra;
  if (ls >> extra) reader.fail("unexpected token '" + extra + "'");
}

template <class F>
auto as_format_error(LineReader& reader, F&& f) {
  try {
    return f();
  } catch (const ArgumentError& e) {
    reader.fail(e.what());
  }
}

}  // namespace detail

inline RegularGraph read_graph(std::istream& is) {
  detail::LineReader reader(is);
  if (reader.next("header") != "regular-graph v1") reader.fail("expected 'regular-graph v1'");
  int n = 0, d = 0;
  detail::parse_fields(reader, reader.next("order and degree"), n, d);
  if (n < 3 || d < 1 || d >= n || (n * d) % 2 != 0) reader.fail("invalid order/degree");
  const std::size_t m = static_cast<std::size_t>(n) * static_cast<std::size_t>(d) / 2;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    detail::parse_fields(reader, reader.next("edge"), u, v);
    if (!(0 <= u && u < v && v < n)) reader.fail("edge must satisfy 0 <= u < v < n");
    Edge e(u, v);
    if (!edges.empty() && !(edges.back() < e)) reader.fail("edges must be sorted and distinct");
    edges.push_back(e);
  }
  reader.finish();
  return detail::as_format_error(reader, [&] { return RegularGraph(n, d, std::move(edges)); });
}

inline RegularGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

// "drawing v1"
//   drawing v1
//   <n> <m>
//   <xn> <xd> <yn> <yd>     n lines, vertex i at (xn/xd, yn/yd)
//   <u> <v>                 m lines
// followed by optional '#' comment lines such as
//   # construction star <n> <d>

struct DrawingFile {
  GeometricDrawing drawing;
  std::vector<std::string> comments;
};

inline void write_drawing(std::ostream& os, const GeometricDrawing& drawing,
                          const std::vector<std::string>& trailer = {}) {
  os << "drawing v1\n" << drawing.graph.order() << ' ' << drawing.graph.size() << '\n';
  for (const Point& p : drawing.positions) {
    os << boost::multiprecision::numerator(p.x) << ' ' << boost::multiprecision::denominator(p.x) << ' '
       << boost::multiprecision::numerator(p.y) << ' ' << boost::multiprecision::denominator(p.y) << '\n';
  }
  for (const Edge& e : drawing.graph.edges()) os << e.u << ' ' << e.v << '\n';
  for (const std::string& line : trailer) os << "# " << line << '\n';
}

inline std::string to_drawing_text(const GeometricDrawing& drawing, const std::vector<std::string>& trailer = {}) {
  std::ostringstream os;
  write_drawing(os, drawing, trailer);
  return os.str();
}

inline DrawingFile read_drawing(std::istream& is) {
  detail::LineReader reader(is);
  if (reader.next("header") != "drawing v1") reader.fail("expected 'drawing v1'");
  int n = 0;
  std::size_t m = 0;
  detail::parse_fields(reader, reader.next("vertex and edge counts"), n, m);
  if (n < 3) reader.fail("drawing needs at least 3 vertices");
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) {
    std::string xn, xd, yn, yd;
    detail::parse_fields(reader, reader.next("vertex"), xn, xd, yn, yd);
    auto parse_int = [&](const std::string& s) {
      std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
        reader.fail("not an integer: '" + s + "'");
      return BigInt(s);
    };
    BigInt xden = parse_int(xd), yden = parse_int(yd);
    if (xden == 0 || yden == 0) reader.fail("zero denominator");
    points.emplace_back(Rational(parse_int(xn), xden), Rational(parse_int(yn), yden));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    detail::parse_fields(reader, reader.next("edge"), u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) reader.fail("edge endpoint out of range");
    edges.emplace_back(u, v);
  }
  reader.finish();
  RegularGraph graph = detail::as_format_error(reader, [&] { return RegularGraph(n, std::move(edges)); });
  return DrawingFile{GeometricDrawing(std::move(graph), std::move(points)), reader.comments()};
}

inline DrawingFile parse_drawing(const std::string& text) {
  std::istringstream is(text);
  return read_drawing(is);
}

}  // namespace maxcross::io
