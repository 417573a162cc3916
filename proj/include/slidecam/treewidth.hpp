#pragma once

// Tree decompositions of the pixel dual graph and of the auxiliary graph H,
// and a dynamic program over a nice decomposition of H that finds a minimum
// guard set dominating every cross at distance two.

#include <cstddef>
#include <string>
#include <vector>

#include "slidecam/exact.hpp"
#include "slidecam/hitset.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam {

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  void add_edge(std::size_t a, std::size_t b);
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::vector<Edge> edges() const;  // a < b, sorted
  bool connected() const;
  bool is_tree() const { return connected() && edge_count() + 1 == vertex_count(); }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted, no duplicates
};

struct TreeDecomposition {
  std::vector<std::vector<std::size_t>> bags;  // sorted vertex ids
  std::vector<std::size_t> parent;             // npos at the root

  std::size_t node_count() const { return bags.size(); }
  // max bag size - 1; -1 is reported as 0 for an empty decomposition
  std::size_t width() const;
  std::size_t root() const;
  std::vector<std::vector<std::size_t>> children() const;
};

Graph dual_graph(const Pixelation& pix);
Graph to_graph(const AuxiliaryGraph& h);

// Min-fill elimination ordering. Trees come out with width 1.
TreeDecomposition decompose(const Graph& g);

// Each pixel of a bag becomes its cross (if kept), both supporting
// slice-segments, and the kept guards lying along its sides.
TreeDecomposition lift_decomposition(const TreeDecomposition& td_dual, const AuxiliaryGraph& h,
                                     const Pixelation& pix);

enum class DecompositionViolation { kNone, kMalformedTree, kVertexOutOfRange, kVertexMissing, kDisconnected, kEdgeUncovered };

std::string to_string(DecompositionViolation v);

struct DecompositionCheck {
  DecompositionViolation violation = DecompositionViolation::kNone;
  std::size_t vertex = npos;        // for kVertexMissing / kDisconnected / kVertexOutOfRange
  Edge edge{npos, npos};            // for kEdgeUncovered
  bool valid() const { return violation == DecompositionViolation::kNone; }
};

DecompositionCheck validate_decomposition(const TreeDecomposition& td, const Graph& g);

inline constexpr std::size_t kDefaultWidthMax = 20;
inline constexpr std::size_t kHardWidthMax = 31;  // two bits per bag slot in a 64-bit key

struct DpOptions {
  std::size_t width_max = kDefaultWidthMax;
};

struct DpStats {
  std::size_t nice_nodes = 0;
  std::size_t max_table = 0;
  std::size_t table_entries = 0;
};

SolveResult dp_solve(const AuxiliaryGraph& h, const TreeDecomposition& td_h, const DpOptions& options = {},
                     DpStats* stats = nullptr);

struct DpPipeline {
  SolveResult result;
  std::size_t dual_width = 0;
  std::size_t lifted_width = 0;
  std::size_t bags = 0;
  DpStats stats;
};

// dual graph -> decompose -> lift -> dp_solve, followed by a geometric certificate.
DpPipeline solve_with_treewidth(const Pixelation& pix, const std::vector<std::size_t>& cross_ids,
                                const std::vector<std::size_t>& guard_ids, const DpOptions& options = {});

}  // namespace slidecam
