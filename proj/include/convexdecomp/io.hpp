#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "convexdecomp/decomposition.hpp"
#include "convexdecomp/geometry.hpp"

namespace convexdecomp {

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

namespace detail {

struct LineScanner {
  std::string_view text;
  size_t pos = 0;
  int line_no = 0;

  // next non-empty line with comments stripped; returns false at the end
  bool next(std::string_view* out, int* out_line) {
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      const size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      size_t b = 0;
      size_t e = line.size();
      while (b < e && (line[b] == ' ' || line[b] == '\t' || line[b] == '\r')) ++b;
      while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t' ||
                       line[e - 1] == '\r')) --e;
      if (b == e) continue;
      *out = line.substr(b, e - b);
      *out_line = line_no;
      return true;
    }
    return false;
  }
};

inline long long parse_int(std::string_view line, size_t* cursor, int line_no,
                           const char* what) {
  size_t c = *cursor;
  while (c < line.size() && (line[c] == ' ' || line[c] == '\t')) ++c;
  if (c >= line.size()) {
    throw ParseError(line_no, static_cast<int>(c) + 1,
                     std::string("expected ") + what);
  }
  long long value = 0;
  const auto* begin = line.data() + c;
  const auto* end = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc()) {
    throw ParseError(line_no, static_cast<int>(c) + 1,
                     std::string("expected ") + what);
  }
  *cursor = static_cast<size_t>(ptr - line.data());
  return value;
}

}  // namespace detail

// One `x y` pair per line, `#` comments, 0-based indices by line order.
inline PointSet parse_point_set(std::string_view text) {
  detail::LineScanner scan{text};
  std::string_view line;
  int line_no = 0;
  std::vector<Point> pts;
  while (scan.next(&line, &line_no)) {
    size_t cursor = 0;
    const long long x = detail::parse_int(line, &cursor, line_no, "x coordinate");
    const long long y = detail::parse_int(line, &cursor, line_no, "y coordinate");
    while (cursor < line.size() &&
           (line[cursor] == ' ' || line[cursor] == '\t')) {
      ++cursor;
    }
    if (cursor != line.size()) {
      throw ParseError(line_no, static_cast<int>(cursor) + 1,
                       "trailing characters after coordinates");
    }
    if (x < -kCoordLimit || x > kCoordLimit || y < -kCoordLimit ||
        y > kCoordLimit) {
      throw ParseError(line_no, 1, "coordinate out of range");
    }
    pts.push_back(Point{static_cast<Coord>(x), static_cast<Coord>(y)});
  }
  if (pts.size() < 3) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1,
                     "point set needs at least 3 points");
  }
  return PointSet::from_points(std::move(pts));
}

inline std::string serialize_point_set(const PointSet& ps) {
  std::string out;
  for (int i = 0; i < ps.size(); ++i) {
    out += std::to_string(ps[i].x);
    out += ' ';
    out += std::to_string(ps[i].y);
    out += '\n';
  }
  return out;
}

// Header `n=<n> c=<c> k=<k> cells=<m> algo=<tag>`, then one cell per line as
// 0-based indices, CCW, starting at the smallest index, cells sorted.
inline std::string serialize_decomposition(const Decomposition& d) {
  std::vector<Polygon> cells = d.cells;
  canonicalize_cells(cells);
  std::string out = "n=" + std::to_string(d.acct.n) +
                    " c=" + std::to_string(d.acct.c) +
                    " k=" + std::to_string(d.acct.k) +
                    " cells=" + std::to_string(cells.size()) +
                    " algo=" + (d.source.empty() ? "unknown" : d.source) + "\n";
  for (const Polygon& cell : cells) {
    for (int i = 0; i < cell.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cell[i]);
    }
    out += '\n';
  }
  return out;
}

inline Decomposition parse_decomposition(std::string_view text) {
  detail::LineScanner scan{text};
  std::string_view line;
  int line_no = 0;
  if (!scan.next(&line, &line_no)) {
    throw ParseError(1, 1, "missing decomposition header");
  }
  Decomposition d;
  long long declared_cells = -1;
  {
    std::string work(line);
    std::istringstream is(work);
    std::string token;
    while (is >> token) {
      const size_t eq = token.find('=');
      if (eq == std::string::npos) {
        throw ParseError(line_no, 1, "malformed header token '" + token + "'");
      }
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      try {
        if (key == "n") d.acct.n = std::stoi(value);
        else if (key == "c") d.acct.c = std::stoi(value);
        else if (key == "k") d.acct.k = std::stoi(value);
        else if (key == "cells") declared_cells = std::stoll(value);
        else if (key == "algo") d.source = value;
        else throw ParseError(line_no, 1, "unknown header key '" + key + "'");
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, 1, "bad number in header token '" + token + "'");
      } catch (const std::out_of_range&) {
        throw ParseError(line_no, 1, "number out of range in header token '" + token + "'");
      }
    }
  }
  if (d.acct.n < 3) throw ParseError(line_no, 1, "header n is missing or < 3");
  while (scan.next(&line, &line_no)) {
    size_t cursor = 0;
    std::vector<int> ids;
    while (cursor < line.size()) {
      const long long v = detail::parse_int(line, &cursor, line_no, "vertex index");
      if (v < 0 || v >= d.acct.n) {
        throw ParseError(line_no, static_cast<int>(cursor), "vertex index " +
                             std::to_string(v) + " out of range");
      }
      ids.push_back(static_cast<int>(v));
      while (cursor < line.size() &&
             (line[cursor] == ' ' || line[cursor] == '\t')) {
        ++cursor;
      }
    }
    if (ids.size() < 3) {
      throw ParseError(line_no, 1, "cell needs at least 3 vertices");
    }
    d.cells.push_back(Polygon::of(std::move(ids)));
  }
  if (declared_cells >= 0 &&
      declared_cells != static_cast<long long>(d.cells.size())) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1,
                     "header declares " + std::to_string(declared_cells) +
                         " cells, file has " + std::to_string(d.cells.size()));
  }
  return d;
}

}  // namespace convexdecomp
