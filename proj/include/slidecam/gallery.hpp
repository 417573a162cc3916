#pragma once

// Polygon families and the constructive guarding procedures: one camera for
// polygons with at most 8 vertices, and peeling for path-segmentations.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slidecam/exact.hpp"
#include "slidecam/geometry.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Shape { kComb, kPathLowerBound, kRandomSimple, kRandomMonotone, kThinTree };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);  // throws std::invalid_argument

struct GeneratorSpec {
  Shape shape = Shape::kComb;
  std::size_t k = 1;  // teeth, repetitions, vertex count or branches depending on shape
  std::uint64_t seed = 0;
};

OrthoPolygon generate(const GeneratorSpec& spec);

// Spine [0,1]x[0,2k-1] with teeth [1,3]x[2i,2i+1]; n = 4k.
OrthoPolygon gen_comb(std::size_t k);

// 3k-2 unit columns cycling through [0,1], [0,3], [2,3], [0,3]: alcoves
// alternate between the bottom and the top. n = 6k-2 and k cameras are needed.
OrthoPolygon gen_path_lb(std::size_t k);

// Hole-free polyomino grown cell by cell to exactly n vertices, then stretched.
OrthoPolygon gen_random_simple(std::size_t n, std::uint64_t seed);

// x-monotone polygon with n vertices; one end of the column interval moves at
// every column boundary.
OrthoPolygon gen_random_monotone(std::size_t n, std::uint64_t seed);

// Unit-width corridors without 2x2 blocks: one main corridor plus
// branches-1 side arms. Thin and hole-free.
OrthoPolygon gen_thin_tree(std::size_t branches, std::uint64_t seed);

// Every hole-free polyomino inside a w x h box with at most max_vertices
// vertices, one per distinct normalized polygon.
std::vector<OrthoPolygon> lattice_polygons(std::size_t w, std::size_t h, std::size_t max_vertices);

struct Camera {
  Orientation orientation = Orientation::kHorizontal;
  Coord anchor = 0;
  Interval span;
};

// Canonical guard of pix whose hit set contains everything the segment sees.
// npos when no guard dominates it.
std::size_t canonical_guard_for(const Pixelation& pix, const Camera& camera);

struct SmallGuard {
  SolveStatus status = SolveStatus::kOk;
  GuardSegment camera;  // canonical guard of pixelate(P)
  bool rotated = false;
  std::string message;
  bool ok() const { return status == SolveStatus::kOk; }
};

SmallGuard guard_small(const OrthoPolygon& polygon);

struct PeelStep {
  std::size_t slices_removed = 0;
  OrthoPolygon piece;
  GuardSegment camera;  // in the piece's pixelation
  OrthoPolygon remainder;
  bool last = false;    // piece is the whole remaining polygon
};

struct PathGuard {
  SolveResult result;
  Orientation segmentation = Orientation::kVertical;
  std::vector<PeelStep> steps;
};

// Does the dual of the given segmentation form a path?
bool has_path_segmentation(const OrthoPolygon& polygon, Orientation orientation);

PathGuard path_guard(const OrthoPolygon& polygon);

inline constexpr std::size_t kOracleUniverseLimit = 40;

struct BoundReport {
  SolveStatus status = SolveStatus::kOk;
  std::size_t n = 0;
  bool simple = true;
  std::size_t msc = 0;
  std::size_t mhsc = 0;
  std::size_t msc_bound = 0;   // floor((3n+4)/16), checked for simple polygons only
  std::size_t mhsc_bound = 0;  // floor(n/4)
  bool msc_ok = true;
  bool mhsc_ok = true;
  bool ok() const { return status == SolveStatus::kOk && msc_ok && mhsc_ok; }
};

BoundReport check_bounds(const OrthoPolygon& polygon, std::size_t universe_limit = kOracleUniverseLimit);

}  // namespace slidecam
