#include "slidecam/geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace slidecam {

namespace {

constexpr Coord kCoordLimit = std::numeric_limits<std::int32_t>::max();

int sign(Coord v) { return (v > 0) - (v < 0); }

bool segments_touch(Point a0, Point a1, Point b0, Point b1) {
  // Axis-parallel segments intersect iff their bounding boxes do.
  const Interval ax{std::min(a0.x, a1.x), std::max(a0.x, a1.x)};
  const Interval ay{std::min(a0.y, a1.y), std::max(a0.y, a1.y)};
  const Interval bx{std::min(b0.x, b1.x), std::max(b0.x, b1.x)};
  const Interval by{std::min(b0.y, b1.y), std::max(b0.y, b1.y)};
  return ax.touches(bx) && ay.touches(by);
}

// Point strictly off the ring boundary; crossing parity over vertical edges.
bool point_in_ring(Point p, const Ring& ring) {
  bool in = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    if (a.x != b.x || a.x <= p.x) continue;
    const Coord lo = std::min(a.y, b.y);
    const Coord hi = std::max(a.y, b.y);
    if (lo <= p.y && p.y < hi) in = !in;
  }
  return in;
}

bool rings_touch(const Ring& a, const Ring& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (segments_touch(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
    }
  }
  return false;
}

Ring normalize_ring(const Ring& raw, std::size_t ring_index) {
  const std::string where = "ring " + std::to_string(ring_index);
  for (const Point& p : raw) {
    if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
      throw PolygonError(PolygonErrorKind::kCoordinateRange, where + " has a coordinate outside the 32-bit range");
    }
  }
  Ring ring;
  for (const Point& p : raw) {
    if (ring.empty() || ring.back() != p) ring.push_back(p);
  }
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    if (a.x != b.x && a.y != b.y) {
      throw PolygonError(PolygonErrorKind::kNonOrthogonalEdge,
                         where + " edge (" + std::to_string(a.x) + "," + std::to_string(a.y) + ")-(" +
                             std::to_string(b.x) + "," + std::to_string(b.y) + ") is not axis-parallel");
    }
  }
  if (ring.size() < 4) {
    throw PolygonError(PolygonErrorKind::kDegenerateRing, where + " has fewer than 4 distinct vertices");
  }
  // Drop collinear vertices; a reversal in place is a spike.
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const std::size_t n = ring.size();
      const Point prev = ring[(i + n - 1) % n];
      const Point cur = ring[i];
      const Point next = ring[(i + 1) % n];
      const bool horizontal_in = prev.y == cur.y;
      const bool horizontal_out = cur.y == next.y;
      if (horizontal_in != horizontal_out) continue;
      const Coord dot = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
      if (dot < 0) {
        throw PolygonError(PolygonErrorKind::kSelfIntersection,
                           where + " folds back on itself at (" + std::to_string(cur.x) + "," +
                               std::to_string(cur.y) + ")");
      }
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (ring.size() < 4 || signed_area2(ring) == 0) {
    throw PolygonError(PolygonErrorKind::kDegenerateRing, where + " encloses no area");
  }
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (segments_touch(ring[i], ring[i + 1], ring[j], ring[(j + 1) % n])) {
        throw PolygonError(PolygonErrorKind::kSelfIntersection, where + " is not simple");
      }
    }
  }
  return ring;
}

void orient(Ring& ring, bool counterclockwise) {
  if ((signed_area2(ring) > 0) != counterclockwise) std::reverse(ring.begin(), ring.end());
  const auto first = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), first, ring.end());
}

// Band indices adjacent to a doubled coordinate along one axis.
std::vector<std::size_t> bands(const std::vector<Coord>& cuts, Coord v2) {
  std::vector<std::size_t> out;
  if (cuts.size() < 2 || v2 < 2 * cuts.front() || v2 > 2 * cuts.back()) return out;
  // First cut with 2*cut >= v2.
  const auto it = std::lower_bound(cuts.begin(), cuts.end(), v2, [](Coord c, Coord v) { return 2 * c < v; });
  const std::size_t k = static_cast<std::size_t>(it - cuts.begin());
  if (2 * cuts[k] == v2) {
    if (k > 0) out.push_back(k - 1);
    if (k + 1 < cuts.size()) out.push_back(k);
  } else {
    out.push_back(k - 1);
  }
  return out;
}

}  // namespace

std::string to_string(PolygonErrorKind kind) {
  switch (kind) {
    case PolygonErrorKind::kNonOrthogonalEdge: return "NonOrthogonalEdge";
    case PolygonErrorKind::kSelfIntersection: return "SelfIntersection";
    case PolygonErrorKind::kHoleOutsideOuter: return "HoleOutsideOuter";
    case PolygonErrorKind::kDegenerateRing: return "DegenerateRing";
    case PolygonErrorKind::kCoordinateRange: return "CoordinateRange";
  }
  return "Unknown";
}

std::size_t OrthoPolygon::vertex_count() const {
  std::size_t n = outer.size();
  for (const Ring& h : holes) n += h.size();
  return n;
}

Coord OrthoPolygon::area() const {
  Coord a2 = signed_area2(outer);
  for (const Ring& h : holes) a2 += signed_area2(h);
  return a2 / 2;
}

Coord signed_area2(const Ring& ring) {
  Coord s = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

OrthoPolygon validate_polygon(const std::vector<Ring>& rings) {
  if (rings.empty()) throw PolygonError(PolygonErrorKind::kDegenerateRing, "no rings given");
  OrthoPolygon poly;
  poly.outer = normalize_ring(rings[0], 0);
  orient(poly.outer, true);
  for (std::size_t r = 1; r < rings.size(); ++r) {
    Ring hole = normalize_ring(rings[r], r);
    orient(hole, false);
    const std::string where = "hole " + std::to_string(r);
    if (rings_touch(hole, poly.outer)) {
      throw PolygonError(PolygonErrorKind::kHoleOutsideOuter, where + " touches the outer boundary");
    }
    if (!point_in_ring(hole[0], poly.outer)) {
      throw PolygonError(PolygonErrorKind::kHoleOutsideOuter, where + " lies outside the outer ring");
    }
    for (const Ring& other : poly.holes) {
      if (rings_touch(hole, other)) {
        throw PolygonError(PolygonErrorKind::kSelfIntersection, where + " touches another hole");
      }
      if (point_in_ring(hole[0], other) || point_in_ring(other[0], hole)) {
        throw PolygonError(PolygonErrorKind::kHoleOutsideOuter, where + " is nested with another hole");
      }
    }
    poly.holes.push_back(std::move(hole));
  }
  std::sort(poly.holes.begin(), poly.holes.end(), [](const Ring& a, const Ring& b) { return a.front() < b.front(); });
  return poly;
}

std::vector<Point> reflex_vertices(const OrthoPolygon& polygon) {
  std::vector<Point> out;
  auto scan = [&](const Ring& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = ring[(i + n - 1) % n];
      const Point b = ring[i];
      const Point c = ring[(i + 1) % n];
      const Coord cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
      // Interior is on the left of every ring, so a right turn is reflex.
      if (sign(cross) < 0) out.push_back(b);
    }
  };
  scan(polygon.outer);
  for (const Ring& h : polygon.holes) scan(h);
  return out;
}

Point rotate_quarter(Point p) { return {-p.y, p.x}; }
Point rotate_quarter_back(Point p) { return {p.y, -p.x}; }

OrthoPolygon rotate_quarter(const OrthoPolygon& polygon) {
  std::vector<Ring> rings;
  auto rot = [](const Ring& r) {
    Ring out;
    out.reserve(r.size());
    for (Point p : r) out.push_back(rotate_quarter(p));
    return out;
  };
  rings.push_back(rot(polygon.outer));
  for (const Ring& h : polygon.holes) rings.push_back(rot(h));
  return validate_polygon(rings);
}

CellGrid::CellGrid(std::vector<Coord> xs, std::vector<Coord> ys, std::vector<std::uint8_t> inside)
    : xs_(std::move(xs)), ys_(std::move(ys)), inside_(std::move(inside)) {
  if (inside_.size() != columns() * rows()) throw std::invalid_argument("CellGrid: cell count mismatch");
}

CellGrid::CellGrid(const OrthoPolygon& polygon) {
  auto collect = [&](const Ring& r) {
    for (Point p : r) {
      xs_.push_back(p.x);
      ys_.push_back(p.y);
    }
  };
  collect(polygon.outer);
  for (const Ring& h : polygon.holes) collect(h);
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  std::sort(ys_.begin(), ys_.end());
  ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());

  inside_.assign(columns() * rows(), 0);
  std::vector<std::pair<Point, Point>> verticals;
  auto edges = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Point a = r[i];
      const Point b = r[(i + 1) % r.size()];
      if (a.x == b.x) verticals.emplace_back(a, b);
    }
  };
  edges(polygon.outer);
  for (const Ring& h : polygon.holes) edges(h);

  std::vector<Coord> crossings;
  for (std::size_t row = 0; row < rows(); ++row) {
    const Coord y_lo = ys_[row];
    const Coord y_hi = ys_[row + 1];
    crossings.clear();
    for (const auto& [a, b] : verticals) {
      if (std::min(a.y, b.y) <= y_lo && std::max(a.y, b.y) >= y_hi) crossings.push_back(a.x);
    }
    std::sort(crossings.begin(), crossings.end());
    std::size_t k = 0;
    for (std::size_t col = 0; col < columns(); ++col) {
      while (k < crossings.size() && crossings[k] <= xs_[col]) ++k;
      inside_[cell_index(col, row)] = (k % 2 == 1) ? 1 : 0;
    }
  }
}

bool CellGrid::inside_or_false(std::ptrdiff_t col, std::ptrdiff_t row) const {
  if (col < 0 || row < 0 || col >= static_cast<std::ptrdiff_t>(columns()) ||
      row >= static_cast<std::ptrdiff_t>(rows())) {
    return false;
  }
  return inside(static_cast<std::size_t>(col), static_cast<std::size_t>(row));
}

std::size_t CellGrid::x_index(Coord x) const {
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  return (it != xs_.end() && *it == x) ? static_cast<std::size_t>(it - xs_.begin()) : npos;
}

std::size_t CellGrid::y_index(Coord y) const {
  const auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
  return (it != ys_.end() && *it == y) ? static_cast<std::size_t>(it - ys_.begin()) : npos;
}

bool CellGrid::contains_point2(Coord x2, Coord y2) const {
  for (std::size_t c : bands(xs_, x2)) {
    for (std::size_t r : bands(ys_, y2)) {
      if (inside(c, r)) return true;
    }
  }
  return false;
}

bool CellGrid::contains_segment2(Orientation o, Coord anchor2, Coord lo2, Coord hi2) const {
  if (lo2 > hi2) std::swap(lo2, hi2);
  if (lo2 == hi2) {
    return o == Orientation::kHorizontal ? contains_point2(lo2, anchor2) : contains_point2(anchor2, lo2);
  }
  const auto& across = o == Orientation::kHorizontal ? ys_ : xs_;
  const auto& along = o == Orientation::kHorizontal ? xs_ : ys_;
  const std::vector<std::size_t> side = bands(across, anchor2);
  if (side.empty() || along.empty() || lo2 < 2 * along.front() || hi2 > 2 * along.back()) return false;
  for (std::size_t k = 0; k + 1 < along.size(); ++k) {
    const Coord a = 2 * along[k];
    const Coord b = 2 * along[k + 1];
    if (b <= lo2 || a >= hi2) continue;
    bool ok = false;
    for (std::size_t s : side) {
      ok = o == Orientation::kHorizontal ? inside(k, s) : inside(s, k);
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

OrthoPolygon polygon_from_cells(const CellGrid& cells) {
  // Grid vertex (i, j) encoded as j * (columns + 1) + i.
  const std::size_t w = cells.columns() + 1;
  std::map<std::size_t, std::size_t> next;
  auto add = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
    const std::size_t from = j0 * w + i0;
    if (!next.emplace(from, j1 * w + i1).second) {
      throw PolygonError(PolygonErrorKind::kSelfIntersection, "cell union is pinched at a vertex");
    }
  };
  for (std::size_t r = 0; r < cells.rows(); ++r) {
    for (std::size_t c = 0; c < cells.columns(); ++c) {
      if (!cells.inside(c, r)) continue;
      const auto ci = static_cast<std::ptrdiff_t>(c);
      const auto ri = static_cast<std::ptrdiff_t>(r);
      if (!cells.inside_or_false(ci, ri - 1)) add(c, r, c + 1, r);
      if (!cells.inside_or_false(ci + 1, ri)) add(c + 1, r, c + 1, r + 1);
      if (!cells.inside_or_false(ci, ri + 1)) add(c + 1, r + 1, c, r + 1);
      if (!cells.inside_or_false(ci - 1, ri)) add(c, r + 1, c, r);
    }
  }
  if (next.empty()) throw PolygonError(PolygonErrorKind::kDegenerateRing, "empty cell union");

  std::vector<Ring> outers;
  std::vector<Ring> holes;
  while (!next.empty()) {
    Ring ring;
    const std::size_t start = next.begin()->first;
    std::size_t v = start;
    do {
      ring.push_back({cells.xs()[v % w], cells.ys()[v / w]});
      const auto it = next.find(v);
      v = it->second;
      next.erase(it);
    } while (v != start);
    (signed_area2(ring) > 0 ? outers : holes).push_back(std::move(ring));
  }
  if (outers.size() != 1) {
    throw PolygonError(PolygonErrorKind::kDegenerateRing, "cell union is not connected");
  }
  std::vector<Ring> rings{std::move(outers.front())};
  for (Ring& h : holes) rings.push_back(std::move(h));
  return validate_polygon(rings);
}

OrthoPolygon polygon_from_rects(std::span<const Rect> rects) {
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const Rect& r : rects) {
    if (r.width() <= 0 || r.height() <= 0) continue;
    xs.insert(xs.end(), {r.x1, r.x2});
    ys.insert(ys.end(), {r.y1, r.y2});
  }
  if (xs.empty()) throw PolygonError(PolygonErrorKind::kDegenerateRing, "no rectangles with area");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<std::uint8_t> inside((xs.size() - 1) * (ys.size() - 1), 0);
  for (const Rect& r : rects) {
    if (r.width() <= 0 || r.height() <= 0) continue;
    const auto c0 = std::lower_bound(xs.begin(), xs.end(), r.x1) - xs.begin();
    const auto c1 = std::lower_bound(xs.begin(), xs.end(), r.x2) - xs.begin();
    const auto r0 = std::lower_bound(ys.begin(), ys.end(), r.y1) - ys.begin();
    const auto r1 = std::lower_bound(ys.begin(), ys.end(), r.y2) - ys.begin();
    for (auto row = r0; row < r1; ++row) {
      for (auto col = c0; col < c1; ++col) {
        inside[static_cast<std::size_t>(row) * (xs.size() - 1) + static_cast<std::size_t>(col)] = 1;
      }
    }
  }
  return polygon_from_cells(CellGrid(std::move(xs), std::move(ys), std::move(inside)));
}

}  // namespace slidecam
