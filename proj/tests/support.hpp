#pragma once

// Fixtures and independent oracles shared by the test binaries. Nothing here
// calls into the code under test except to build inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "slidecam/exact.hpp"
#include "slidecam/geometry.hpp"
#include "slidecam/hitset.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam::testing {

OrthoPolygon rectangle(Coord w = 4, Coord h = 4);
OrthoPolygon l_shape();
// Two reflex corners at distinct x: 8 vertices, three vertical slices.
OrthoPolygon staircase8();
// 6x6 square with a 2x2 hole in the middle.
OrthoPolygon square_with_hole();
// 3x3 block of unit cells with every cut line present: a 3x3 pixel grid.
OrthoPolygon plus_grid();

// Random union of unit cells in a w x h box; may contain holes. Retries until
// the union is a single polygon.
OrthoPolygon random_cell_polygon(std::uint64_t seed, std::size_t w, std::size_t h, double density = 0.6);

// Seeded family of small polygons: random simple ones with n in [4, max_n] and
// a share of cell polygons (some with holes).
std::vector<OrthoPolygon> small_polygons(std::size_t count, std::size_t max_n, std::uint64_t seed,
                                         bool allow_holes = true);

// Ray casting on the rings; boundary points count as inside. Coordinates are
// given in quarter units so every sample point is exact.
bool inside_closed_q(const OrthoPolygon& p, Coord xq, Coord yq);
// Axis-parallel segment inside the closed polygon, quarter units.
bool segment_inside_q(const OrthoPolygon& p, Orientation o, Coord anchor_q, Coord a_q, Coord b_q);
// Does the point see the segment along a perpendicular inside P?
bool point_sees_q(const OrthoPolygon& p, Coord xq, Coord yq, Orientation o, Coord anchor, Interval span);
// Every interior sample point of the rect at quarter offsets sees the segment.
bool rect_seen(const OrthoPolygon& p, const Rect& r, Orientation o, Coord anchor, Interval span);

struct NaiveCounts {
  std::size_t pixels = 0;
  std::size_t slices_h = 0;
  std::size_t slices_v = 0;
  Coord pixel_area = 0;
};
// Cells of the full coordinate grid merged across edges that no chord from a
// reflex vertex (and no boundary) cuts.
NaiveCounts naive_pixel_count(const OrthoPolygon& p);

// Closed intersection of a segment with a slice-segment, recomputed in doubled units.
bool oracle_hits(const GuardSegment& g, const Cross& c, const Pixelation& pix);

// Smallest hitting set by enumerating subsets of the whole universe in order of
// size. nullopt when infeasible.
std::optional<std::size_t> exhaustive_min(const HittingInstance& inst);

// BFS to depth two in H from the chosen guard vertices.
bool bfs_dominates(const AuxiliaryGraph& h, const std::vector<std::size_t>& guard_vertices);

std::size_t exact_opt(const Pixelation& pix, bool horizontal, bool vertical);

}  // namespace slidecam::testing
