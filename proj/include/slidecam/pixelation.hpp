#pragma once

// Segmentations, pixelation, crosses and guard-segments of an orthogonal
// polygon, together with the exact hitting and visibility predicates.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slidecam/geometry.hpp"

namespace slidecam {

// The midline of a slice. A horizontal slice-segment sits at y = anchor and
// spans the slice's x-range; a vertical one at x = anchor spans its y-range.
struct SliceSegment {
  Orientation orientation = Orientation::kHorizontal;
  HalfCoord anchor;
  Interval span;
};

struct Slice {
  Orientation orientation = Orientation::kHorizontal;
  Rect rect;
  SliceSegment segment;
  std::vector<std::size_t> pixels;  // filled by pixelate()
};

struct Pixel {
  Rect rect;
  std::size_t h_slice = npos;
  std::size_t v_slice = npos;
};

// One per pixel. Supports are slice-segment ids (see Pixelation::sigma).
struct Cross {
  std::size_t pixel_id = npos;
  std::size_t h_support = npos;
  std::size_t v_support = npos;
  HalfCoord x;
  HalfCoord y;
};

struct GuardSegment {
  std::size_t id = npos;
  Orientation orientation = Orientation::kHorizontal;
  Coord anchor = 0;  // grid line: y for horizontal, x for vertical
  Interval span;
  std::vector<std::size_t> hit_set;  // sorted cross ids
};

// Every maximal in-polygon run on a grid line. Runs that lie entirely on
// pixel edges are the guard candidates; `guard` is the canonical guard with
// the same hit set (npos if none exists).
struct RawSegment {
  Orientation orientation = Orientation::kHorizontal;
  Coord anchor = 0;
  Interval span;
  bool along_pixel_edges = false;
  std::vector<std::size_t> hit_set;
  std::size_t guard = npos;
};

using Edge = std::pair<std::size_t, std::size_t>;

class Pixelation {
 public:
  OrthoPolygon polygon;
  CellGrid grid;
  std::vector<Coord> x_cuts;
  std::vector<Coord> y_cuts;
  std::vector<Pixel> pixels;
  std::vector<std::size_t> cell_pixel;  // per grid cell, pixel id or npos
  std::vector<Slice> slices_h;
  std::vector<Slice> slices_v;
  std::vector<Cross> crosses;
  std::vector<GuardSegment> guards;  // canonical, sorted by (orientation, anchor, span)
  std::vector<RawSegment> raw_segments;
  std::vector<Edge> dual_edges;

  // Slice-segment ids: horizontal slices first, then vertical ones.
  std::size_t sigma_count() const { return slices_h.size() + slices_v.size(); }
  const SliceSegment& sigma(std::size_t id) const {
    return id < slices_h.size() ? slices_h[id].segment : slices_v[id - slices_h.size()].segment;
  }
  const Slice& slice_of_sigma(std::size_t id) const {
    return id < slices_h.size() ? slices_h[id] : slices_v[id - slices_h.size()];
  }
  std::vector<std::size_t> all_cross_ids() const;
  std::vector<std::size_t> guard_ids(bool horizontal, bool vertical) const;

  // Canonical guard of the maximal run on the given grid line that contains
  // the point `along` (closed). npos if none.
  std::size_t locate_guard(Orientation o, Coord anchor, Coord along) const;
  // Raw run on the line containing [span.lo, span.hi], or npos.
  std::size_t locate_raw(Orientation o, Coord anchor, Interval span) const;
};

std::vector<Slice> segmentation(const OrthoPolygon& polygon, Orientation orientation);

Pixelation pixelate(const OrthoPolygon& polygon);

struct OrientationSet {
  bool horizontal = true;
  bool vertical = true;
};

std::vector<GuardSegment> guard_segments(const Pixelation& pix, OrientationSet orientations);

// Closed-segment intersection of a camera with a slice-segment.
bool intersects(Orientation o, Coord anchor, Interval span, const SliceSegment& sigma);
bool intersects(const GuardSegment& g, const SliceSegment& sigma);

bool hits(const GuardSegment& g, const Cross& c, const Pixelation& pix);

// Pixels whose cross sees the camera along a perpendicular inside the polygon.
// Works for any axis-parallel segment inside the polygon, maximal or not.
std::vector<std::size_t> visible_region(const Pixelation& pix, Orientation o, Coord anchor, Interval span);
std::vector<std::size_t> visible_region(const Pixelation& pix, const GuardSegment& g);

struct CoverageWitness {
  std::size_t cross = npos;
  std::size_t guard = npos;
  std::size_t sigma = npos;
};

struct CoverageReport {
  std::vector<std::size_t> uncovered;
  std::vector<CoverageWitness> certificate;  // one per covered cross
  bool covered() const { return uncovered.empty(); }
};

CoverageReport verify_cover(const Pixelation& pix, std::span<const std::size_t> guard_ids,
                            std::span<const std::size_t> cross_ids);

struct SliceGraph {
  std::vector<Slice> slices;
  std::vector<Edge> edges;
  bool is_path() const;
  // Slice ids in path order starting from the end with the smaller id.
  std::vector<std::size_t> path_order() const;
};

SliceGraph segmentation_dual(const OrthoPolygon& polygon, Orientation orientation);

// True when no pixel corner lies in the polygon's interior.
bool is_thin(const Pixelation& pix);

}  // namespace slidecam
