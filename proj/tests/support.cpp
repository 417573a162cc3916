#include "support.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "slidecam/gallery.hpp"

namespace slidecam::testing {

OrthoPolygon rectangle(Coord w, Coord h) { return validate_polygon({{{0, 0}, {w, 0}, {w, h}, {0, h}}}); }

OrthoPolygon l_shape() { return validate_polygon({{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}); }

OrthoPolygon staircase8() {
  return validate_polygon({{{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}, {0, 3}}});
}

OrthoPolygon square_with_hole() {
  return validate_polygon({{{0, 0}, {6, 0}, {6, 6}, {0, 6}}, {{2, 2}, {2, 4}, {4, 4}, {4, 2}}});
}

OrthoPolygon plus_grid() {
  // A 3x3 square whose notches at the middle of each side put cut lines through
  // both interior grid lines in both directions.
  return validate_polygon({{{0, 0}, {1, 0}, {1, -1}, {2, -1}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {3, 2},
                            {3, 3}, {2, 3}, {2, 4}, {1, 4}, {1, 3}, {0, 3}, {0, 2}, {-1, 2}, {-1, 1}, {0, 1}}});
}

OrthoPolygon random_cell_polygon(std::uint64_t seed, std::size_t w, std::size_t h, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Coord> xs(w + 1), ys(h + 1);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::uint8_t> inside(w * h);
    for (auto& c : inside) c = coin(rng) ? 1 : 0;
    try {
      return polygon_from_cells(CellGrid(xs, ys, inside));
    } catch (const PolygonError&) {
    }
  }
  throw std::runtime_error("random_cell_polygon: no connected union found");
}

std::vector<OrthoPolygon> small_polygons(std::size_t count, std::size_t max_n, std::uint64_t seed, bool allow_holes) {
  std::vector<OrthoPolygon> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> half(2, max_n / 2);
  for (std::size_t i = 0; out.size() < count; ++i) {
    if (allow_holes && i % 4 == 3) {
      OrthoPolygon p = random_cell_polygon(rng(), 4, 4);
      if (p.vertex_count() <= max_n) out.push_back(std::move(p));
    } else {
      out.push_back(gen_random_simple(2 * half(rng), rng()));
    }
  }
  return out;
}

namespace {

bool on_boundary_q(const Ring& ring, Coord xq, Coord yq) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    if (a.x == b.x) {
      if (xq == 4 * a.x && yq >= 4 * std::min(a.y, b.y) && yq <= 4 * std::max(a.y, b.y)) return true;
    } else if (yq == 4 * a.y && xq >= 4 * std::min(a.x, b.x) && xq <= 4 * std::max(a.x, b.x)) {
      return true;
    }
  }
  return false;
}

int crossings_q(const Ring& ring, Coord xq, Coord yq) {
  int count = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    if (a.x != b.x) continue;
    if ((4 * a.y > yq) != (4 * b.y > yq) && xq < 4 * a.x) ++count;
  }
  return count;
}

class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) { return parent_[v] == v ? v : parent_[v] = find(parent_[v]); }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool inside_closed_q(const OrthoPolygon& p, Coord xq, Coord yq) {
  if (on_boundary_q(p.outer, xq, yq)) return true;
  for (const Ring& h : p.holes) {
    if (on_boundary_q(h, xq, yq)) return true;
  }
  int c = crossings_q(p.outer, xq, yq);
  for (const Ring& h : p.holes) c += crossings_q(h, xq, yq);
  return c % 2 == 1;
}

bool segment_inside_q(const OrthoPolygon& p, Orientation o, Coord anchor_q, Coord a_q, Coord b_q) {
  if (a_q > b_q) std::swap(a_q, b_q);
  // Between consecutive integers the status along the line is constant, so the
  // endpoints, the integers and the midpoints between them decide.
  std::vector<Coord> stops{a_q, b_q};
  for (Coord v = (a_q + 3) / 4 * 4; v <= b_q; v += 4) stops.push_back(v);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  const std::size_t m = stops.size();
  for (std::size_t i = 0; i + 1 < m; ++i) stops.push_back((stops[i] + stops[i + 1]) / 2);
  for (Coord s : stops) {
    const bool in = o == Orientation::kHorizontal ? inside_closed_q(p, s, anchor_q) : inside_closed_q(p, anchor_q, s);
    if (!in) return false;
  }
  return true;
}

bool point_sees_q(const OrthoPolygon& p, Coord xq, Coord yq, Orientation o, Coord anchor, Interval span) {
  const Coord along = o == Orientation::kHorizontal ? xq : yq;
  const Coord from = o == Orientation::kHorizontal ? yq : xq;
  if (along < 4 * span.lo || along > 4 * span.hi) return false;
  return segment_inside_q(p, perpendicular(o), along, from, 4 * anchor);
}

bool rect_seen(const OrthoPolygon& p, const Rect& r, Orientation o, Coord anchor, Interval span) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Coord xq = 4 * r.x1 + i * (r.x2 - r.x1);
      const Coord yq = 4 * r.y1 + j * (r.y2 - r.y1);
      if (!point_sees_q(p, xq, yq, o, anchor, span)) return false;
    }
  }
  return true;
}

NaiveCounts naive_pixel_count(const OrthoPolygon& p) {
  std::vector<Coord> xs, ys;
  auto collect = [&](const Ring& r) {
    for (Point v : r) {
      xs.push_back(v.x);
      ys.push_back(v.y);
    }
  };
  collect(p.outer);
  for (const Ring& h : p.holes) collect(h);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t cols = xs.size() - 1, rows = ys.size() - 1;

  std::vector<char> in(cols * rows);
  auto cell = [&](std::ptrdiff_t c, std::ptrdiff_t r) -> bool {
    if (c < 0 || r < 0 || c >= static_cast<std::ptrdiff_t>(cols) || r >= static_cast<std::ptrdiff_t>(rows)) return false;
    return in[r * cols + c] != 0;
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) in[r * cols + c] = inside_closed_q(p, 2 * (xs[c] + xs[c + 1]), 2 * (ys[r] + ys[r + 1]));
  }

  // v_cut[r * (cols + 1) + i]: the line x = xs[i] is cut within row r.
  std::vector<char> v_cut((cols + 1) * rows), h_cut((rows + 1) * cols);
  for (std::size_t i = 0; i <= cols; ++i) {
    for (std::size_t j = 0; j <= rows; ++j) {
      const auto ci = static_cast<std::ptrdiff_t>(i), rj = static_cast<std::ptrdiff_t>(j);
      const bool ll = cell(ci - 1, rj - 1), lr = cell(ci, rj - 1), ul = cell(ci - 1, rj), ur = cell(ci, rj);
      if (ll + lr + ul + ur != 3) continue;
      // Extend away from the missing quadrant.
      const bool up = ul && ur;
      for (std::ptrdiff_t r = up ? rj : rj - 1; cell(ci - 1, r) && cell(ci, r); r += up ? 1 : -1) {
        v_cut[r * (cols + 1) + i] = 1;
      }
      const bool right = lr && ur;
      for (std::ptrdiff_t c = right ? ci : ci - 1; cell(c, rj - 1) && cell(c, rj); c += right ? 1 : -1) {
        h_cut[j * cols + c] = 1;
      }
    }
  }

  auto components = [&](bool use_v, bool use_h) {
    Dsu dsu(cols * rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (!in[r * cols + c]) continue;
        if (c + 1 < cols && in[r * cols + c + 1] && !(use_v && v_cut[r * (cols + 1) + c + 1])) {
          dsu.unite(r * cols + c, r * cols + c + 1);
        }
        if (r + 1 < rows && in[(r + 1) * cols + c] && !(use_h && h_cut[(r + 1) * cols + c])) {
          dsu.unite(r * cols + c, (r + 1) * cols + c);
        }
      }
    }
    std::size_t n = 0;
    for (std::size_t k = 0; k < cols * rows; ++k) n += in[k] && dsu.find(k) == k;
    return n;
  };

  NaiveCounts out;
  out.pixels = components(true, true);
  out.slices_h = components(false, true);
  out.slices_v = components(true, false);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (in[r * cols + c]) out.pixel_area += (xs[c + 1] - xs[c]) * (ys[r + 1] - ys[r]);
    }
  }
  return out;
}

namespace {

bool segment_meets(const GuardSegment& g, const SliceSegment& s) {
  // Doubled units: the guard is [2lo, 2hi] at 2*anchor.
  const Coord ga = 2 * g.anchor, glo = 2 * g.span.lo, ghi = 2 * g.span.hi;
  const Coord sa = s.anchor.twice, slo = 2 * s.span.lo, shi = 2 * s.span.hi;
  if (g.orientation == s.orientation) return ga == sa && std::max(glo, slo) <= std::min(ghi, shi);
  return glo <= sa && sa <= ghi && slo <= ga && ga <= shi;
}

}  // namespace

bool oracle_hits(const GuardSegment& g, const Cross& c, const Pixelation& pix) {
  return segment_meets(g, pix.sigma(c.h_support)) || segment_meets(g, pix.sigma(c.v_support));
}

std::optional<std::size_t> exhaustive_min(const HittingInstance& inst) {
  const std::size_t u = inst.universe.size();
  if (u > 22) throw std::length_error("exhaustive_min: universe too large");
  std::vector<std::uint32_t> masks;
  for (const auto& s : inst.sets) {
    std::uint32_t m = 0;
    for (std::size_t e : s) m |= 1u << e;
    masks.push_back(m);
  }
  std::optional<std::size_t> best;
  for (std::uint32_t sub = 0; sub < (1u << u); ++sub) {
    const auto size = static_cast<std::size_t>(std::popcount(sub));
    if (best && size >= *best) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & sub) != 0; })) best = size;
  }
  return best;
}

bool bfs_dominates(const AuxiliaryGraph& h, const std::vector<std::size_t>& guard_vertices) {
  std::vector<int> dist(h.vertex_count(), -1);
  std::deque<std::size_t> queue;
  for (std::size_t v : guard_vertices) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (dist[v] == 2) continue;
    for (std::size_t w : h.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t k = 0; k < h.cross_ids.size(); ++k) {
    if (dist[h.cross_vertex(k)] < 0) return false;
  }
  return true;
}

std::size_t exact_opt(const Pixelation& pix, bool horizontal, bool vertical) {
  const auto crosses = pix.all_cross_ids();
  const auto guards = pix.guard_ids(horizontal, vertical);
  const SolveResult r = brute_force_min_cover(build_instance(pix, crosses, guards));
  if (!r.ok()) throw std::runtime_error("exact_opt: " + to_string(r.status));
  return r.solution.size();
}

}  // namespace slidecam::testing
