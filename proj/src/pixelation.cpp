#include "slidecam/pixelation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace slidecam {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

int sign(Coord v) { return (v > 0) - (v < 0); }

// Ray pieces on grid lines. h_ray[j * cols + c] marks the piece of horizontal
// line j over column c; v_ray[i * rows + r] the piece of vertical line i over row r.
struct RayMarks {
  std::vector<std::uint8_t> h_ray;
  std::vector<std::uint8_t> v_ray;
};

RayMarks extend_rays(const OrthoPolygon& polygon, const CellGrid& grid) {
  const std::size_t cols = grid.columns();
  const std::size_t rows = grid.rows();
  RayMarks marks;
  marks.h_ray.assign((rows + 1) * cols, 0);
  marks.v_ray.assign((cols + 1) * rows, 0);

  auto walk_h = [&](std::size_t i, std::size_t j, int dir) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    if (dir > 0) {
      for (std::size_t p = i; p < cols; ++p) {
        const auto pp = static_cast<std::ptrdiff_t>(p);
        if (!grid.inside_or_false(pp, jj - 1) || !grid.inside_or_false(pp, jj)) break;
        marks.h_ray[j * cols + p] = 1;
      }
    } else {
      for (std::size_t p = i; p-- > 0;) {
        const auto pp = static_cast<std::ptrdiff_t>(p);
        if (!grid.inside_or_false(pp, jj - 1) || !grid.inside_or_false(pp, jj)) break;
        marks.h_ray[j * cols + p] = 1;
      }
    }
  };
  auto walk_v = [&](std::size_t i, std::size_t j, int dir) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    if (dir > 0) {
      for (std::size_t q = j; q < rows; ++q) {
        const auto qq = static_cast<std::ptrdiff_t>(q);
        if (!grid.inside_or_false(ii - 1, qq) || !grid.inside_or_false(ii, qq)) break;
        marks.v_ray[i * rows + q] = 1;
      }
    } else {
      for (std::size_t q = j; q-- > 0;) {
        const auto qq = static_cast<std::ptrdiff_t>(q);
        if (!grid.inside_or_false(ii - 1, qq) || !grid.inside_or_false(ii, qq)) break;
        marks.v_ray[i * rows + q] = 1;
      }
    }
  };

  auto scan = [&](const Ring& ring) {
    const std::size_t n = ring.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Point a = ring[(k + n - 1) % n];
      const Point v = ring[k];
      const Point b = ring[(k + 1) % n];
      const Coord turn = (v.x - a.x) * (b.y - v.y) - (v.y - a.y) * (b.x - v.x);
      if (turn >= 0) continue;  // convex
      const std::size_t i = grid.x_index(v.x);
      const std::size_t j = grid.y_index(v.y);
      // Continue each incident edge through v into the interior.
      const int hdir = a.y == v.y ? sign(v.x - a.x) : sign(v.x - b.x);
      const int vdir = a.x == v.x ? sign(v.y - a.y) : sign(v.y - b.y);
      walk_h(i, j, hdir);
      walk_v(i, j, vdir);
    }
  };
  scan(polygon.outer);
  for (const Ring& h : polygon.holes) scan(h);
  return marks;
}

struct SliceLayout {
  std::vector<Slice> slices;
  std::vector<std::size_t> cell_slice;  // npos outside
};

SliceLayout build_slices(const CellGrid& grid, const RayMarks& marks, Orientation o) {
  const std::size_t cols = grid.columns();
  const std::size_t rows = grid.rows();
  DisjointSets sets(cols * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!grid.inside(c, r)) continue;
      if (c + 1 < cols && grid.inside(c + 1, r)) {
        if (o == Orientation::kHorizontal || !marks.v_ray[(c + 1) * rows + r]) {
          sets.unite(grid.cell_index(c, r), grid.cell_index(c + 1, r));
        }
      }
      if (r + 1 < rows && grid.inside(c, r + 1)) {
        if (o == Orientation::kVertical || !marks.h_ray[(r + 1) * cols + c]) {
          sets.unite(grid.cell_index(c, r), grid.cell_index(c, r + 1));
        }
      }
    }
  }
  struct Box {
    std::size_t c0, c1, r0, r1, cells;
  };
  std::map<std::size_t, Box> boxes;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!grid.inside(c, r)) continue;
      const std::size_t root = sets.find(grid.cell_index(c, r));
      auto [it, fresh] = boxes.try_emplace(root, Box{c, c, r, r, 0});
      Box& b = it->second;
      b.c0 = std::min(b.c0, c);
      b.c1 = std::max(b.c1, c);
      b.r0 = std::min(b.r0, r);
      b.r1 = std::max(b.r1, r);
      ++b.cells;
    }
  }
  SliceLayout layout;
  std::vector<std::pair<Rect, std::size_t>> found;
  for (const auto& [root, b] : boxes) {
    if (b.cells != (b.c1 - b.c0 + 1) * (b.r1 - b.r0 + 1)) {
      throw std::logic_error("segmentation produced a non-rectangular slice");
    }
    const Rect rect{grid.xs()[b.c0], grid.ys()[b.r0], grid.xs()[b.c1 + 1], grid.ys()[b.r1 + 1]};
    found.emplace_back(rect, root);
  }
  std::sort(found.begin(), found.end(), [o](const auto& a, const auto& b) {
    if (o == Orientation::kHorizontal) return std::tie(a.first.y1, a.first.x1) < std::tie(b.first.y1, b.first.x1);
    return std::tie(a.first.x1, a.first.y1) < std::tie(b.first.x1, b.first.y1);
  });
  std::map<std::size_t, std::size_t> root_to_id;
  for (const auto& [rect, root] : found) {
    Slice s;
    s.orientation = o;
    s.rect = rect;
    s.segment.orientation = o;
    if (o == Orientation::kHorizontal) {
      s.segment.anchor = HalfCoord::mid(rect.y1, rect.y2);
      s.segment.span = rect.x_range();
    } else {
      s.segment.anchor = HalfCoord::mid(rect.x1, rect.x2);
      s.segment.span = rect.y_range();
    }
    root_to_id[root] = layout.slices.size();
    layout.slices.push_back(std::move(s));
  }
  layout.cell_slice.assign(cols * rows, npos);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (grid.inside(c, r)) layout.cell_slice[grid.cell_index(c, r)] = root_to_id[sets.find(grid.cell_index(c, r))];
    }
  }
  return layout;
}

std::vector<Edge> adjacency_from_cells(const CellGrid& grid, const std::vector<std::size_t>& label) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.columns(); ++c) {
      const std::size_t a = label[grid.cell_index(c, r)];
      if (a == npos) continue;
      if (c + 1 < grid.columns()) {
        const std::size_t b = label[grid.cell_index(c + 1, r)];
        if (b != npos && b != a) edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      if (r + 1 < grid.rows()) {
        const std::size_t b = label[grid.cell_index(c, r + 1)];
        if (b != npos && b != a) edges.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::size_t> compute_hit_set(const Pixelation& pix, Orientation o, Coord anchor, Interval span) {
  std::vector<char> hit_sigma(pix.sigma_count(), 0);
  for (std::size_t s = 0; s < pix.sigma_count(); ++s) hit_sigma[s] = intersects(o, anchor, span, pix.sigma(s)) ? 1 : 0;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pix.crosses.size(); ++c) {
    if (hit_sigma[pix.crosses[c].h_support] || hit_sigma[pix.crosses[c].v_support]) out.push_back(c);
  }
  return out;
}

void build_segments(Pixelation& pix) {
  const CellGrid& grid = pix.grid;
  const std::size_t cols = grid.columns();
  const std::size_t rows = grid.rows();
  auto pixel_at = [&](std::ptrdiff_t c, std::ptrdiff_t r) -> std::size_t {
    if (!grid.inside_or_false(c, r)) return npos;
    return pix.cell_pixel[grid.cell_index(static_cast<std::size_t>(c), static_cast<std::size_t>(r))];
  };

  auto scan_line = [&](Orientation o, std::size_t line, std::size_t pieces) {
    std::size_t run_start = npos;
    bool run_edges = true;
    auto close = [&](std::size_t end_piece) {
      RawSegment seg;
      seg.orientation = o;
      const auto& along = o == Orientation::kHorizontal ? grid.xs() : grid.ys();
      seg.anchor = o == Orientation::kHorizontal ? grid.ys()[line] : grid.xs()[line];
      seg.span = {along[run_start], along[end_piece]};
      seg.along_pixel_edges = run_edges;
      pix.raw_segments.push_back(std::move(seg));
      run_start = npos;
      run_edges = true;
    };
    for (std::size_t p = 0; p < pieces; ++p) {
      const auto pp = static_cast<std::ptrdiff_t>(p);
      const auto ll = static_cast<std::ptrdiff_t>(line);
      const std::size_t a = o == Orientation::kHorizontal ? pixel_at(pp, ll - 1) : pixel_at(ll - 1, pp);
      const std::size_t b = o == Orientation::kHorizontal ? pixel_at(pp, ll) : pixel_at(ll, pp);
      const bool in_polygon = a != npos || b != npos;
      if (!in_polygon) {
        if (run_start != npos) close(p);
        continue;
      }
      if (run_start == npos) run_start = p;
      if (a == b) run_edges = false;  // crosses a pixel's interior
    }
    if (run_start != npos) close(pieces);
  };
  for (std::size_t j = 0; j <= rows; ++j) scan_line(Orientation::kHorizontal, j, cols);
  for (std::size_t i = 0; i <= cols; ++i) scan_line(Orientation::kVertical, i, rows);

  std::map<std::pair<Orientation, std::vector<std::size_t>>, std::size_t> classes;
  for (RawSegment& seg : pix.raw_segments) {
    seg.hit_set = compute_hit_set(pix, seg.orientation, seg.anchor, seg.span);
    if (!seg.along_pixel_edges) continue;
    auto [it, fresh] = classes.try_emplace({seg.orientation, seg.hit_set}, pix.guards.size());
    if (fresh) {
      GuardSegment g;
      g.id = pix.guards.size();
      g.orientation = seg.orientation;
      g.anchor = seg.anchor;
      g.span = seg.span;
      g.hit_set = seg.hit_set;
      pix.guards.push_back(std::move(g));
    }
  }
  for (RawSegment& seg : pix.raw_segments) {
    const auto it = classes.find({seg.orientation, seg.hit_set});
    seg.guard = it == classes.end() ? npos : it->second;
  }
}

}  // namespace

std::vector<std::size_t> Pixelation::all_cross_ids() const {
  std::vector<std::size_t> ids(crosses.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<std::size_t> Pixelation::guard_ids(bool horizontal, bool vertical) const {
  std::vector<std::size_t> ids;
  for (const GuardSegment& g : guards) {
    if ((g.orientation == Orientation::kHorizontal && horizontal) || (g.orientation == Orientation::kVertical && vertical)) {
      ids.push_back(g.id);
    }
  }
  return ids;
}

std::size_t Pixelation::locate_raw(Orientation o, Coord anchor, Interval span) const {
  for (std::size_t i = 0; i < raw_segments.size(); ++i) {
    const RawSegment& seg = raw_segments[i];
    if (seg.orientation == o && seg.anchor == anchor && seg.span.lo <= span.lo && span.hi <= seg.span.hi) return i;
  }
  return npos;
}

std::size_t Pixelation::locate_guard(Orientation o, Coord anchor, Coord along) const {
  const std::size_t raw = locate_raw(o, anchor, {along, along});
  return raw == npos ? npos : raw_segments[raw].guard;
}

std::vector<Slice> segmentation(const OrthoPolygon& polygon, Orientation orientation) {
  const CellGrid grid(polygon);
  return build_slices(grid, extend_rays(polygon, grid), orientation).slices;
}

Pixelation pixelate(const OrthoPolygon& polygon) {
  Pixelation pix;
  pix.polygon = polygon;
  pix.grid = CellGrid(polygon);
  pix.x_cuts = pix.grid.xs();
  pix.y_cuts = pix.grid.ys();
  const CellGrid& grid = pix.grid;
  const RayMarks marks = extend_rays(polygon, grid);
  SliceLayout h = build_slices(grid, marks, Orientation::kHorizontal);
  SliceLayout v = build_slices(grid, marks, Orientation::kVertical);
  pix.slices_h = std::move(h.slices);
  pix.slices_v = std::move(v.slices);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_to_pixel;
  std::vector<std::pair<Rect, std::pair<std::size_t, std::size_t>>> found;
  for (std::size_t cell = 0; cell < h.cell_slice.size(); ++cell) {
    if (h.cell_slice[cell] == npos) continue;
    const auto key = std::make_pair(h.cell_slice[cell], v.cell_slice[cell]);
    if (pair_to_pixel.emplace(key, 0).second) {
      const Rect& a = pix.slices_h[key.first].rect;
      const Rect& b = pix.slices_v[key.second].rect;
      found.push_back({Rect{std::max(a.x1, b.x1), std::max(a.y1, b.y1), std::min(a.x2, b.x2), std::min(a.y2, b.y2)}, key});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.y1, a.first.x1) < std::tie(b.first.y1, b.first.x1);
  });
  for (const auto& [rect, key] : found) {
    pair_to_pixel[key] = pix.pixels.size();
    pix.pixels.push_back({rect, key.first, key.second});
  }
  pix.cell_pixel.assign(h.cell_slice.size(), npos);
  for (std::size_t cell = 0; cell < h.cell_slice.size(); ++cell) {
    if (h.cell_slice[cell] != npos) pix.cell_pixel[cell] = pair_to_pixel[{h.cell_slice[cell], v.cell_slice[cell]}];
  }

  const std::size_t h_count = pix.slices_h.size();
  for (std::size_t p = 0; p < pix.pixels.size(); ++p) {
    const Pixel& px = pix.pixels[p];
    pix.slices_h[px.h_slice].pixels.push_back(p);
    pix.slices_v[px.v_slice].pixels.push_back(p);
    Cross c;
    c.pixel_id = p;
    c.h_support = px.h_slice;
    c.v_support = h_count + px.v_slice;
    c.x = pix.slices_v[px.v_slice].segment.anchor;
    c.y = pix.slices_h[px.h_slice].segment.anchor;
    if (c.x.twice < 2 * px.rect.x1 || c.x.twice > 2 * px.rect.x2 || c.y.twice < 2 * px.rect.y1 ||
        c.y.twice > 2 * px.rect.y2) {
      throw std::logic_error("cross lies outside its pixel");
    }
    pix.crosses.push_back(c);
  }
  pix.dual_edges = adjacency_from_cells(grid, pix.cell_pixel);
  build_segments(pix);
  return pix;
}

std::vector<GuardSegment> guard_segments(const Pixelation& pix, OrientationSet orientations) {
  std::vector<GuardSegment> out;
  for (const GuardSegment& g : pix.guards) {
    if ((g.orientation == Orientation::kHorizontal && orientations.horizontal) ||
        (g.orientation == Orientation::kVertical && orientations.vertical)) {
      out.push_back(g);
    }
  }
  return out;
}

bool intersects(Orientation o, Coord anchor, Interval span, const SliceSegment& sigma) {
  if (o == sigma.orientation) {
    return 2 * anchor == sigma.anchor.twice && span.touches(sigma.span);
  }
  return 2 * span.lo <= sigma.anchor.twice && sigma.anchor.twice <= 2 * span.hi && sigma.span.contains(anchor);
}

bool intersects(const GuardSegment& g, const SliceSegment& sigma) {
  return intersects(g.orientation, g.anchor, g.span, sigma);
}

bool hits(const GuardSegment& g, const Cross& c, const Pixelation& pix) {
  return intersects(g, pix.sigma(c.h_support)) || intersects(g, pix.sigma(c.v_support));
}

std::vector<std::size_t> visible_region(const Pixelation& pix, Orientation o, Coord anchor, Interval span) {
  std::vector<std::size_t> out;
  for (const Cross& c : pix.crosses) {
    // Foot of the perpendicular from the cross onto the camera's line.
    const HalfCoord foot = o == Orientation::kHorizontal ? c.x : c.y;
    const HalfCoord from = o == Orientation::kHorizontal ? c.y : c.x;
    if (foot.twice < 2 * span.lo || foot.twice > 2 * span.hi) continue;
    if (pix.grid.contains_segment2(perpendicular(o), foot.twice, from.twice, 2 * anchor)) out.push_back(c.pixel_id);
  }
  return out;
}

std::vector<std::size_t> visible_region(const Pixelation& pix, const GuardSegment& g) {
  return visible_region(pix, g.orientation, g.anchor, g.span);
}

CoverageReport verify_cover(const Pixelation& pix, std::span<const std::size_t> guard_ids,
                            std::span<const std::size_t> cross_ids) {
  std::vector<std::size_t> chosen(guard_ids.begin(), guard_ids.end());
  std::sort(chosen.begin(), chosen.end());
  CoverageReport report;
  for (std::size_t cid : cross_ids) {
    const Cross& c = pix.crosses.at(cid);
    CoverageWitness w;
    for (std::size_t gid : chosen) {
      const GuardSegment& g = pix.guards.at(gid);
      if (intersects(g, pix.sigma(c.h_support))) {
        w = {cid, gid, c.h_support};
      } else if (intersects(g, pix.sigma(c.v_support))) {
        w = {cid, gid, c.v_support};
      } else {
        continue;
      }
      break;
    }
    if (w.guard == npos) {
      report.uncovered.push_back(cid);
    } else {
      report.certificate.push_back(w);
    }
  }
  return report;
}

bool SliceGraph::is_path() const {
  const std::size_t n = slices.size();
  if (n == 0 || edges.size() != n - 1) return false;
  std::vector<std::size_t> degree(n, 0);
  DisjointSets sets(n);
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
    sets.unite(a, b);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] > 2 || sets.find(v) != sets.find(0)) return false;
  }
  return true;
}

std::vector<std::size_t> SliceGraph::path_order() const {
  if (!is_path()) return {};
  const std::size_t n = slices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t start = 0;
  while (adj[start].size() > 1) ++start;
  std::vector<std::size_t> order{start};
  std::size_t prev = npos;
  std::size_t cur = start;
  while (order.size() < n) {
    const std::size_t nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = nxt;
    order.push_back(cur);
  }
  return order;
}

SliceGraph segmentation_dual(const OrthoPolygon& polygon, Orientation orientation) {
  const CellGrid grid(polygon);
  SliceLayout layout = build_slices(grid, extend_rays(polygon, grid), orientation);
  SliceGraph g;
  g.edges = adjacency_from_cells(grid, layout.cell_slice);
  g.slices = std::move(layout.slices);
  return g;
}

bool is_thin(const Pixelation& pix) {
  const CellGrid& grid = pix.grid;
  for (const Pixel& p : pix.pixels) {
    for (Coord x : {p.rect.x1, p.rect.x2}) {
      for (Coord y : {p.rect.y1, p.rect.y2}) {
        const auto i = static_cast<std::ptrdiff_t>(grid.x_index(x));
        const auto j = static_cast<std::ptrdiff_t>(grid.y_index(y));
        if (grid.inside_or_false(i - 1, j - 1) && grid.inside_or_false(i, j - 1) && grid.inside_or_false(i - 1, j) &&
            grid.inside_or_false(i, j)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace slidecam
