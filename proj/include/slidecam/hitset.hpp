#pragma once

// Discrete problem objects: the (X', Gamma') hitting-set instance, the
// orthogonal segment covering reduction, and the auxiliary graph H.

#include <cstddef>
#include <span>
#include <vector>

#include "slidecam/pixelation.hpp"

namespace slidecam {

// Elements are local indices 0..universe.size()-1; universe[e] is the guard id.
// sets[i] lists the elements hitting cross cross_ids[i].
struct HittingInstance {
  std::vector<std::size_t> universe;
  std::vector<std::size_t> cross_ids;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<double> weights;  // per element, positive

  std::size_t element_of(std::size_t guard_id) const;  // npos if absent
  bool feasible() const;
  std::vector<std::size_t> empty_sets() const;  // indices into sets
  bool is_hitting_set(std::span<const std::size_t> elements) const;
  std::vector<std::size_t> to_guard_ids(std::span<const std::size_t> elements) const;
};

HittingInstance build_instance(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                               std::span<const std::size_t> guard_ids);

// Subinstance on the elements accepted by `keep`; sets are restricted, weights
// carried over. Element indices are renumbered.
HittingInstance restrict_universe(const HittingInstance& inst, std::span<const std::size_t> keep);

struct HorizontalTarget {
  std::size_t guard_id = npos;
  Coord y = 0;
  Interval x;
};

struct VerticalTarget {
  std::size_t sigma_id = npos;
  HalfCoord x;
  Interval y;
};

struct SegmentCoveringInstance {
  std::vector<HorizontalTarget> horizontals;
  std::vector<VerticalTarget> verticals;

  // Does the chosen set of horizontals (indices) stab every vertical?
  bool covers(std::span<const std::size_t> chosen) const;
  // The same problem phrased as a hitting set (elements = horizontals).
  HittingInstance as_hitting_instance() const;
};

// Throws std::invalid_argument when a non-horizontal guard is passed.
SegmentCoveringInstance to_segment_covering(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                                            std::span<const std::size_t> horizontal_guard_ids);

enum class AuxKind { kCross, kSigma, kGuard };

// Vertices: crosses of X' first, then every slice-segment, then guards of Gamma'.
class AuxiliaryGraph {
 public:
  std::vector<std::size_t> cross_ids;
  std::vector<std::size_t> guard_ids;
  std::size_t sigma_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t cross_vertex(std::size_t k) const { return k; }
  std::size_t sigma_vertex(std::size_t sigma_id) const { return cross_ids.size() + sigma_id; }
  std::size_t guard_vertex(std::size_t k) const { return cross_ids.size() + sigma_count + k; }
  AuxKind kind(std::size_t v) const;
  // Original id: cross id, slice-segment id, or guard id.
  std::size_t ref(std::size_t v) const;
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const;

  // Every cross of X' is within distance two of the chosen guard vertices.
  bool dominates_within_two(std::span<const std::size_t> guard_vertex_ids) const;
};

AuxiliaryGraph build_auxiliary_graph(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                                     std::span<const std::size_t> guard_ids);

}  // namespace slidecam
