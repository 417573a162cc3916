#include "slidecam/gallery.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "slidecam/hitset.hpp"

namespace slidecam {

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::kComb: return "comb";
    case Shape::kPathLowerBound: return "path_lb";
    case Shape::kRandomSimple: return "random_simple";
    case Shape::kRandomMonotone: return "random_monotone";
    case Shape::kThinTree: return "thin_tree";
  }
  return "unknown";
}

Shape shape_from_string(const std::string& name) {
  for (Shape s : {Shape::kComb, Shape::kPathLowerBound, Shape::kRandomSimple, Shape::kRandomMonotone, Shape::kThinTree}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown shape '" + name + "'");
}

OrthoPolygon generate(const GeneratorSpec& spec) {
  switch (spec.shape) {
    case Shape::kComb: return gen_comb(spec.k);
    case Shape::kPathLowerBound: return gen_path_lb(spec.k);
    case Shape::kRandomSimple: return gen_random_simple(spec.k, spec.seed);
    case Shape::kRandomMonotone: return gen_random_monotone(spec.k, spec.seed);
    case Shape::kThinTree: return gen_thin_tree(spec.k, spec.seed);
  }
  throw std::invalid_argument("unknown shape");
}

namespace {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

// Column intervals of an x-monotone polygon, left to right.
OrthoPolygon from_columns(const std::vector<Coord>& widths, const std::vector<Interval>& columns) {
  Ring ring;
  std::vector<Coord> x{0};
  for (Coord w : widths) x.push_back(x.back() + w);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    ring.push_back({x[i], columns[i].lo});
    ring.push_back({x[i + 1], columns[i].lo});
  }
  for (std::size_t i = columns.size(); i-- > 0;) {
    ring.push_back({x[i + 1], columns[i].hi});
    ring.push_back({x[i], columns[i].hi});
  }
  return validate_polygon({ring});
}

using CellSet = std::set<std::pair<Coord, Coord>>;

// Polygon of unit cells with the given column/row coordinate lines.
OrthoPolygon polygon_of_cells(const CellSet& cells, const std::vector<Coord>& xs, const std::vector<Coord>& ys) {
  const std::size_t cols = xs.size() - 1;
  std::vector<std::uint8_t> inside(cols * (ys.size() - 1), 0);
  for (const auto& [c, r] : cells) inside[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)] = 1;
  return polygon_from_cells(CellGrid(xs, ys, std::move(inside)));
}

std::vector<Coord> unit_lines(std::size_t count) {
  std::vector<Coord> v(count + 1);
  for (std::size_t i = 0; i <= count; ++i) v[i] = static_cast<Coord>(i);
  return v;
}

Camera camera_of(const GuardSegment& g) { return {g.orientation, g.anchor, g.span}; }

Camera rotate_back(const Camera& c) {
  Point a = c.orientation == Orientation::kHorizontal ? Point{c.span.lo, c.anchor} : Point{c.anchor, c.span.lo};
  Point b = c.orientation == Orientation::kHorizontal ? Point{c.span.hi, c.anchor} : Point{c.anchor, c.span.hi};
  a = rotate_quarter_back(a);
  b = rotate_quarter_back(b);
  if (a.x == b.x) return {Orientation::kVertical, a.x, {std::min(a.y, b.y), std::max(a.y, b.y)}};
  return {Orientation::kHorizontal, a.y, {std::min(a.x, b.x), std::max(a.x, b.x)}};
}

SmallGuard failure(SolveStatus status, std::string message) {
  SmallGuard out;
  out.status = status;
  out.message = std::move(message);
  return out;
}

// The camera the construction picks, in the polygon's own coordinates.
Camera small_camera(const Pixelation& pix) {
  const std::size_t n = pix.polygon.vertex_count();
  if (n <= 6) {
    // Horizontal camera along the bottom of the widest horizontal slice.
    const Slice* wide = &pix.slices_h.front();
    for (const Slice& s : pix.slices_h) {
      if (s.rect.width() > wide->rect.width()) wide = &s;
    }
    return {Orientation::kHorizontal, wide->rect.y1, wide->rect.x_range()};
  }
  const SliceGraph vdual = segmentation_dual(pix.polygon, Orientation::kVertical);
  if (vdual.slices.size() != 3 || !vdual.is_path()) throw std::logic_error("8-vertex polygon without a 3-slice path");
  const std::vector<std::size_t> order = vdual.path_order();
  const Rect& left = vdual.slices[order[0]].rect;
  const Rect& mid = vdual.slices[order[1]].rect;
  const Rect& right = vdual.slices[order[2]].rect;
  const Interval on_left{std::max(mid.y1, left.y1), std::min(mid.y2, left.y2)};
  const Interval on_right{std::max(mid.y1, right.y1), std::min(mid.y2, right.y2)};
  const Coord lo = std::max(on_left.lo, on_right.lo);
  const Coord hi = std::min(on_left.hi, on_right.hi);
  if (lo < hi) {
    // A horizontal line through both open sides, extended across all three slices.
    const Coord x1 = std::min({left.x1, mid.x1, right.x1});
    const Coord x2 = std::max({left.x2, mid.x2, right.x2});
    return {Orientation::kHorizontal, lo, {x1, x2}};
  }
  return {Orientation::kVertical, mid.x1, mid.y_range()};
}

bool endpoints_reflex(const std::vector<Point>& reflex, Coord x, Interval ys) {
  auto has = [&](Point p) { return std::find(reflex.begin(), reflex.end(), p) != reflex.end(); };
  return has({x, ys.lo}) && has({x, ys.hi});
}

struct Peel {
  std::size_t take = 0;
  OrthoPolygon piece;
  OrthoPolygon remainder;
};

bool try_peel(const OrthoPolygon& q, const SliceGraph& dual, std::vector<std::size_t> order, Peel& out) {
  const Rect& a = dual.slices[order[0]].rect;
  const Rect& b = dual.slices[order[1]].rect;
  const Coord x = a.x2 == b.x1 ? a.x2 : a.x1;
  const Interval shared{std::max(a.y1, b.y1), std::min(a.y2, b.y2)};
  const std::size_t take = endpoints_reflex(reflex_vertices(q), x, shared) ? 2 : 3;
  if (take >= order.size()) return false;
  std::vector<Rect> head;
  std::vector<Rect> tail;
  for (std::size_t i = 0; i < order.size(); ++i) (i < take ? head : tail).push_back(dual.slices[order[i]].rect);
  Peel p;
  p.take = take;
  p.piece = polygon_from_rects(head);
  if (p.piece.vertex_count() > 8) return false;
  p.remainder = polygon_from_rects(tail);
  out = std::move(p);
  return true;
}

}  // namespace

OrthoPolygon gen_comb(std::size_t k) {
  if (k == 0) throw std::invalid_argument("comb needs k >= 1");
  std::vector<Rect> rects{{0, 0, 1, static_cast<Coord>(2 * k - 1)}};
  for (std::size_t i = 0; i < k; ++i) {
    const auto y = static_cast<Coord>(2 * i);
    rects.push_back({1, y, 3, y + 1});
  }
  return polygon_from_rects(rects);
}

OrthoPolygon gen_path_lb(std::size_t k) {
  if (k == 0) throw std::invalid_argument("path_lb needs k >= 1");
  static const std::array<Interval, 4> cycle{Interval{0, 1}, Interval{0, 3}, Interval{2, 3}, Interval{0, 3}};
  const std::size_t m = 3 * k - 2;
  std::vector<Interval> columns;
  for (std::size_t i = 0; i < m; ++i) columns.push_back(cycle[i % 4]);
  return from_columns(std::vector<Coord>(m, 1), columns);
}

OrthoPolygon gen_random_simple(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("vertex count must be even and >= 4");
  const std::size_t side = n / 2 + 2;
  const std::vector<Coord> lines = unit_lines(side);
  constexpr std::array<std::pair<int, int>, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937_64 rng(stream_seed(seed, attempt));
    const auto mid = static_cast<Coord>(side / 2);
    CellSet cells{{mid, mid}};
    std::size_t vertices = 4;
    for (std::size_t stall = 0; vertices != n && stall < 200;) {
      auto it = cells.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng));
      const auto [dx, dy] = kSteps[std::uniform_int_distribution<std::size_t>(0, 3)(rng)];
      const std::pair<Coord, Coord> q{it->first + dx, it->second + dy};
      if (q.first < 0 || q.second < 0 || q.first >= static_cast<Coord>(side) || q.second >= static_cast<Coord>(side) ||
          cells.count(q)) {
        ++stall;
        continue;
      }
      cells.insert(q);
      bool keep = false;
      try {
        const OrthoPolygon p = polygon_of_cells(cells, lines, lines);
        keep = !p.has_holes() && p.vertex_count() <= n;
        if (keep) vertices = p.vertex_count();
      } catch (const PolygonError&) {
      }
      if (!keep) {
        cells.erase(q);
        ++stall;
      }
    }
    if (vertices != n) continue;
    // Stretch rows and columns independently.
    std::uniform_int_distribution<Coord> stretch(1, 3);
    std::vector<Coord> xs{0};
    std::vector<Coord> ys{0};
    for (std::size_t i = 0; i < side; ++i) {
      xs.push_back(xs.back() + stretch(rng));
      ys.push_back(ys.back() + stretch(rng));
    }
    return polygon_of_cells(cells, xs, ys);
  }
  throw GenerationError("could not grow a polygon with " + std::to_string(n) + " vertices");
}

OrthoPolygon gen_random_monotone(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("vertex count must be even and >= 4");
  const std::size_t changes = (n - 4) / 2;
  const Coord top = static_cast<Coord>(std::max<std::size_t>(3, changes / 2 + 2));
  std::mt19937_64 rng(stream_seed(seed, 0));
  auto uniform = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); };
  Interval cur{uniform(0, top - 1), 0};
  cur.hi = uniform(cur.lo + 1, top);
  std::vector<Interval> columns{cur};
  std::vector<Coord> widths{uniform(1, 3)};
  for (std::size_t i = 0; i < changes; ++i) {
    std::vector<Interval> options;
    for (Coord b = 0; b < cur.hi; ++b) {
      if (b != cur.lo) options.push_back({b, cur.hi});
    }
    for (Coord t = cur.lo + 1; t <= top; ++t) {
      if (t != cur.hi) options.push_back({cur.lo, t});
    }
    cur = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    columns.push_back(cur);
    widths.push_back(uniform(1, 3));
  }
  return from_columns(widths, columns);
}

OrthoPolygon gen_thin_tree(std::size_t branches, std::uint64_t seed) {
  if (branches == 0) throw std::invalid_argument("thin tree needs at least one branch");
  using Cell = std::pair<Coord, Coord>;
  constexpr std::array<Cell, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  auto add = [](Cell a, Cell d) { return Cell{a.first + d.first, a.second + d.second}; };

  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937_64 rng(stream_seed(seed, attempt));
    CellSet cells;
    std::map<Cell, std::vector<Cell>> links;
    // q may join next to p only if p is its sole side neighbour and no corner contact pinches.
    auto can_grow = [&](Cell p, Cell q) {
      if (cells.count(q)) return false;
      for (Cell d : kSteps) {
        const Cell nb = add(q, d);
        if (nb != p && cells.count(nb)) return false;
      }
      for (int dx : {-1, 1}) {
        for (int dy : {-1, 1}) {
          const Cell diag{q.first + dx, q.second + dy};
          if (!cells.count(diag)) continue;
          if (!cells.count({q.first + dx, q.second}) && !cells.count({q.first, q.second + dy})) return false;
        }
      }
      return true;
    };
    auto grow = [&](Cell from, Cell dir, std::size_t length) {
      Cell p = from;
      for (std::size_t i = 0; i < length; ++i) {
        if (i > 0 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
          const std::size_t turn = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
          dir = turn == 0 ? Cell{-dir.second, dir.first} : Cell{dir.second, -dir.first};
        }
        const Cell q = add(p, dir);
        if (!can_grow(p, q)) return i;
        cells.insert(q);
        links[p].push_back(q);
        links[q].push_back(p);
        p = q;
      }
      return length;
    };

    cells.insert({0, 0});
    links[{0, 0}];
    const std::size_t main_length = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
    if (grow({0, 0}, {1, 0}, main_length) == 0) continue;

    std::size_t arms = 0;
    for (std::size_t tries = 0; arms + 1 < branches && tries < 200; ++tries) {
      // Straight interior cells of the current tree.
      std::vector<std::pair<Cell, Cell>> sites;
      for (const auto& [c, nbs] : links) {
        if (nbs.size() != 2) continue;
        const Cell d1{nbs[0].first - c.first, nbs[0].second - c.second};
        const Cell d2{nbs[1].first - c.first, nbs[1].second - c.second};
        if (d1.first + d2.first != 0 || d1.second + d2.second != 0) continue;
        sites.push_back({c, {d1.second, -d1.first}});
        sites.push_back({c, {-d1.second, d1.first}});
      }
      if (sites.empty()) break;
      const auto [at, dir] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
      if (grow(at, dir, std::uniform_int_distribution<std::size_t>(1, 4)(rng)) > 0) ++arms;
    }
    if (arms + 1 < branches) continue;

    Coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    for (const auto& [x, y] : cells) {
      x0 = std::min(x0, x);
      y0 = std::min(y0, y);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
    CellSet shifted;
    for (const auto& [x, y] : cells) shifted.insert({x - x0, y - y0});
    OrthoPolygon p = polygon_of_cells(shifted, unit_lines(static_cast<std::size_t>(x1 - x0 + 1)),
                                      unit_lines(static_cast<std::size_t>(y1 - y0 + 1)));
    if (p.has_holes()) continue;
    return p;
  }
  throw GenerationError("could not grow a thin tree with " + std::to_string(branches) + " branches");
}

std::vector<OrthoPolygon> lattice_polygons(std::size_t w, std::size_t h, std::size_t max_vertices) {
  const std::size_t cells = w * h;
  if (cells > 20) throw std::invalid_argument("lattice box too large to enumerate");
  const std::vector<Coord> xs = unit_lines(w);
  const std::vector<Coord> ys = unit_lines(h);
  std::set<Ring> seen;
  std::vector<OrthoPolygon> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << cells); ++mask) {
    std::vector<std::uint8_t> inside(cells);
    for (std::size_t i = 0; i < cells; ++i) inside[i] = (mask >> i) & 1U;
    OrthoPolygon p;
    try {
      p = polygon_from_cells(CellGrid(xs, ys, std::move(inside)));
    } catch (const PolygonError&) {
      continue;
    }
    if (p.has_holes() || p.vertex_count() > max_vertices) continue;
    Coord mx = p.outer.front().x, my = p.outer.front().y;
    for (Point q : p.outer) {
      mx = std::min(mx, q.x);
      my = std::min(my, q.y);
    }
    Ring key;
    for (Point q : p.outer) key.push_back({q.x - mx, q.y - my});
    if (seen.insert(key).second) out.push_back(validate_polygon({key}));
  }
  return out;
}

std::size_t canonical_guard_for(const Pixelation& pix, const Camera& camera) {
  const std::size_t raw = pix.locate_raw(camera.orientation, camera.anchor, camera.span);
  if (raw != npos && pix.raw_segments[raw].guard != npos) return pix.raw_segments[raw].guard;
  const std::vector<std::size_t> seen = visible_region(pix, camera.orientation, camera.anchor, camera.span);
  for (const GuardSegment& g : pix.guards) {
    if (std::includes(g.hit_set.begin(), g.hit_set.end(), seen.begin(), seen.end())) return g.id;
  }
  return npos;
}

SmallGuard guard_small(const OrthoPolygon& polygon) {
  if (polygon.has_holes()) return failure(SolveStatus::kPreconditionViolated, "polygon has holes");
  if (polygon.vertex_count() > 8) {
    return failure(SolveStatus::kPreconditionViolated, "polygon has " + std::to_string(polygon.vertex_count()) + " > 8 vertices");
  }
  SmallGuard out;
  const Pixelation pix = pixelate(polygon);
  Camera cam;
  if (polygon.vertex_count() == 8) {
    const std::vector<Point> reflex = reflex_vertices(polygon);
    if (reflex.size() == 2 && reflex[0].x == reflex[1].x) {
      out.rotated = true;
      cam = rotate_back(small_camera(pixelate(rotate_quarter(polygon))));
    } else {
      cam = small_camera(pix);
    }
  } else {
    cam = small_camera(pix);
  }
  const std::size_t id = canonical_guard_for(pix, cam);
  if (id == npos) throw std::logic_error("constructed camera has no canonical guard");
  out.camera = pix.guards[id];
  return out;
}

bool has_path_segmentation(const OrthoPolygon& polygon, Orientation orientation) {
  return segmentation_dual(polygon, orientation).is_path();
}

PathGuard path_guard(const OrthoPolygon& polygon) {
  PathGuard out;
  out.result.solution.method = "path";
  if (polygon.has_holes()) {
    out.result.status = SolveStatus::kNotPathSegmentation;
    out.result.message = "polygon has holes";
    return out;
  }
  bool rotated = false;
  if (has_path_segmentation(polygon, Orientation::kVertical)) {
    out.segmentation = Orientation::kVertical;
  } else if (has_path_segmentation(polygon, Orientation::kHorizontal)) {
    out.segmentation = Orientation::kHorizontal;
    rotated = true;
  } else {
    out.result.status = SolveStatus::kNotPathSegmentation;
    out.result.message = "neither segmentation has a path dual";
    return out;
  }

  // Work with a vertical path segmentation; a horizontal one is rotated onto it.
  OrthoPolygon q = rotated ? rotate_quarter(polygon) : polygon;
  std::vector<Camera> cameras;
  while (true) {
    if (q.vertex_count() <= 8) {
      const SmallGuard g = guard_small(q);
      cameras.push_back(camera_of(g.camera));
      out.steps.push_back({segmentation_dual(q, Orientation::kVertical).slices.size(), q, g.camera, {}, true});
      break;
    }
    const SliceGraph dual = segmentation_dual(q, Orientation::kVertical);
    if (!dual.is_path()) {
      out.result.status = SolveStatus::kPreconditionViolated;
      out.result.message = "remainder lost its path segmentation";
      return out;
    }
    std::vector<std::size_t> order = dual.path_order();
    Peel peel;
    bool peeled = try_peel(q, dual, order, peel);
    if (!peeled) {
      std::reverse(order.begin(), order.end());
      peeled = try_peel(q, dual, order, peel);
    }
    if (!peeled) {
      out.result.status = SolveStatus::kPreconditionViolated;
      out.result.message = "no end of the path yields a piece with at most 8 vertices";
      return out;
    }
    const SmallGuard g = guard_small(peel.piece);
    cameras.push_back(camera_of(g.camera));
    out.steps.push_back({peel.take, peel.piece, g.camera, peel.remainder, false});
    q = std::move(peel.remainder);
  }

  const Pixelation pix = pixelate(polygon);
  for (const Camera& c : cameras) {
    const std::size_t id = canonical_guard_for(pix, rotated ? rotate_back(c) : c);
    if (id == npos) throw std::logic_error("peeled camera has no canonical guard");
    out.result.solution.guards.push_back(id);
  }
  auto& guards = out.result.solution.guards;
  std::sort(guards.begin(), guards.end());
  guards.erase(std::unique(guards.begin(), guards.end()), guards.end());
  const std::vector<std::size_t> all = pix.all_cross_ids();
  if (!certify(pix, all, out.result.solution)) throw std::logic_error("peeled cameras leave a cross uncovered");
  return out;
}

BoundReport check_bounds(const OrthoPolygon& polygon, std::size_t universe_limit) {
  BoundReport report;
  report.n = polygon.vertex_count();
  report.simple = !polygon.has_holes();
  report.msc_bound = (3 * report.n + 4) / 16;
  report.mhsc_bound = report.n / 4;
  const Pixelation pix = pixelate(polygon);
  const std::vector<std::size_t> crosses = pix.all_cross_ids();
  const HittingInstance both = build_instance(pix, crosses, pix.guard_ids(true, true));
  const HittingInstance horizontal = build_instance(pix, crosses, pix.guard_ids(true, false));
  if (undominated_elements(both).size() > universe_limit || undominated_elements(horizontal).size() > universe_limit) {
    report.status = SolveStatus::kTooLargeForOracle;
    return report;
  }
  const SolveResult msc = brute_force_min_cover(both);
  const SolveResult mhsc = brute_force_min_cover(horizontal);
  if (!msc.ok() || !mhsc.ok()) {
    report.status = msc.ok() ? mhsc.status : msc.status;
    return report;
  }
  report.msc = msc.solution.size();
  report.mhsc = mhsc.solution.size();
  report.msc_ok = !report.simple || report.msc <= report.msc_bound;
  report.mhsc_ok = report.mhsc <= report.mhsc_bound;
  return report;
}

}  // namespace slidecam
