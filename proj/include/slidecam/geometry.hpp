#pragma once

// Integer orthogonal polygons with holes, plus the compressed cell grid that
// every other module uses for exact containment queries.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidecam {

using Coord = std::int64_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using Ring = std::vector<Point>;

enum class Orientation : std::uint8_t { kHorizontal = 0, kVertical = 1 };

inline Orientation perpendicular(Orientation o) {
  return o == Orientation::kHorizontal ? Orientation::kVertical : Orientation::kHorizontal;
}
inline char orientation_char(Orientation o) { return o == Orientation::kHorizontal ? 'H' : 'V'; }

// Closed interval [lo, hi].
struct Interval {
  Coord lo = 0;
  Coord hi = 0;
  bool contains(Coord v) const { return lo <= v && v <= hi; }
  bool touches(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  Coord length() const { return hi - lo; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Rect {
  Coord x1 = 0;
  Coord y1 = 0;
  Coord x2 = 0;
  Coord y2 = 0;
  Coord width() const { return x2 - x1; }
  Coord height() const { return y2 - y1; }
  Coord area() const { return width() * height(); }
  Interval x_range() const { return {x1, x2}; }
  Interval y_range() const { return {y1, y2}; }
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// A coordinate on the half-integer lattice, stored doubled so comparisons stay
// exact. Slice midlines and cross points live here.
struct HalfCoord {
  Coord twice = 0;
  static HalfCoord of(Coord v) { return {2 * v}; }
  static HalfCoord mid(Coord a, Coord b) { return {a + b}; }
  double value() const { return static_cast<double>(twice) / 2.0; }
  friend auto operator<=>(const HalfCoord&, const HalfCoord&) = default;
};

struct OrthoPolygon {
  Ring outer;               // counterclockwise
  std::vector<Ring> holes;  // clockwise

  std::size_t vertex_count() const;
  Coord area() const;
  bool has_holes() const { return !holes.empty(); }
  friend bool operator==(const OrthoPolygon&, const OrthoPolygon&) = default;
};

enum class PolygonErrorKind {
  kNonOrthogonalEdge,
  kSelfIntersection,
  kHoleOutsideOuter,
  kDegenerateRing,
  kCoordinateRange,
};

std::string to_string(PolygonErrorKind kind);

class PolygonError : public std::runtime_error {
 public:
  PolygonError(PolygonErrorKind kind, const std::string& what)
      : std::runtime_error(to_string(kind) + ": " + what), kind_(kind) {}
  PolygonErrorKind kind() const { return kind_; }

 private:
  PolygonErrorKind kind_;
};

// Twice the signed area (positive for counterclockwise rings).
Coord signed_area2(const Ring& ring);

// Validates and normalizes raw rings; rings[0] is the outer boundary. Merges
// repeated and collinear vertices, fixes orientation (outer CCW, holes CW),
// and rotates each ring to start at its lexicographically smallest vertex.
// Throws PolygonError.
OrthoPolygon validate_polygon(const std::vector<Ring>& rings);

// Reflex vertices of all rings, in ring order.
std::vector<Point> reflex_vertices(const OrthoPolygon& polygon);

// Rotation by +90 degrees about the origin: (x, y) -> (-y, x).
OrthoPolygon rotate_quarter(const OrthoPolygon& polygon);
Point rotate_quarter(Point p);
Point rotate_quarter_back(Point p);

// Compressed grid over all vertex coordinates. A cell is either entirely
// inside or entirely outside the polygon. Segment queries take doubled
// coordinates so half-integer points are exact.
class CellGrid {
 public:
  CellGrid() = default;
  explicit CellGrid(const OrthoPolygon& polygon);
  CellGrid(std::vector<Coord> xs, std::vector<Coord> ys, std::vector<std::uint8_t> inside);

  const std::vector<Coord>& xs() const { return xs_; }
  const std::vector<Coord>& ys() const { return ys_; }
  std::size_t columns() const { return xs_.empty() ? 0 : xs_.size() - 1; }
  std::size_t rows() const { return ys_.empty() ? 0 : ys_.size() - 1; }

  bool inside(std::size_t col, std::size_t row) const { return inside_[row * columns() + col] != 0; }
  // Out-of-range cells count as outside.
  bool inside_or_false(std::ptrdiff_t col, std::ptrdiff_t row) const;
  std::size_t cell_index(std::size_t col, std::size_t row) const { return row * columns() + col; }

  std::size_t x_index(Coord x) const;  // npos when x is not a cut
  std::size_t y_index(Coord y) const;

  // Closed containment, doubled coordinates.
  bool contains_point2(Coord x2, Coord y2) const;
  bool contains_segment2(Orientation o, Coord anchor2, Coord lo2, Coord hi2) const;

 private:
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<std::uint8_t> inside_;
};

// Traces the boundary of a union of grid cells. Throws PolygonError when the
// union is disconnected or pinched at a point.
OrthoPolygon polygon_from_cells(const CellGrid& cells);
OrthoPolygon polygon_from_rects(std::span<const Rect> rects);

}  // namespace slidecam
