#include <algorithm>
#include <random>

#include "doctest.h"
#include "slidecam/gallery.hpp"
#include "slidecam/treewidth.hpp"
#include "support.hpp"

using namespace slidecam;
namespace t = slidecam::testing;

namespace {

struct Lifted {
  Pixelation pix;
  AuxiliaryGraph h;
  TreeDecomposition dual;
  TreeDecomposition lifted;
};

Lifted lift(const OrthoPolygon& p, std::vector<std::size_t> crosses = {}, std::vector<std::size_t> guards = {},
            bool all = true) {
  Lifted l{pixelate(p), {}, {}, {}};
  if (all) {
    crosses = l.pix.all_cross_ids();
    guards = l.pix.guard_ids(true, true);
  }
  l.h = build_auxiliary_graph(l.pix, crosses, guards);
  l.dual = decompose(dual_graph(l.pix));
  l.lifted = lift_decomposition(l.dual, l.h, l.pix);
  return l;
}

Graph grid_graph(std::size_t w, std::size_t h) {
  Graph g(w * h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (c + 1 < w) g.add_edge(r * w + c, r * w + c + 1);
      if (r + 1 < h) g.add_edge(r * w + c, (r + 1) * w + c);
    }
  }
  return g;
}

std::vector<std::size_t> subset(const std::vector<std::size_t>& from, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::size_t> out;
  for (std::size_t v : from) {
    if (coin(rng)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("dual graphs") {
  const Graph rect = dual_graph(pixelate(t::rectangle()));
  CHECK(rect.vertex_count() == 1);
  CHECK(rect.edge_count() == 0);
  const Graph l = dual_graph(pixelate(t::l_shape()));
  CHECK(l.vertex_count() == 3);
  CHECK(l.edge_count() == 2);
  CHECK(l.is_tree());
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(dual_graph(pixelate(gen_thin_tree(3, s))).is_tree());
}

TEST_CASE("min-fill decompositions") {
  const TreeDecomposition k1 = decompose(Graph(1));
  CHECK(k1.node_count() == 1);
  CHECK(k1.width() == 0);

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  const TreeDecomposition path = decompose(p3);
  CHECK(path.width() == 1);
  CHECK(validate_decomposition(path, p3).valid());

  const Graph grid = grid_graph(3, 3);
  const TreeDecomposition gd = decompose(grid);
  CHECK(gd.width() <= 3);
  CHECK(validate_decomposition(gd, grid).valid());

  const Graph plus = dual_graph(pixelate(t::plus_grid()));
  const TreeDecomposition pd = decompose(plus);
  CHECK(pd.width() <= 3);
  CHECK(validate_decomposition(pd, plus).valid());

  // Disconnected input still gives one tree.
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const TreeDecomposition td = decompose(two);
  CHECK(validate_decomposition(td, two).valid());
  CHECK(td.width() == 1);
}

TEST_CASE("lifting the rectangle gives one bag holding all of H") {
  const Lifted l = lift(t::rectangle());
  REQUIRE(l.lifted.node_count() == 1);
  CHECK(l.lifted.bags[0].size() == l.h.vertex_count());
  CHECK(l.h.vertex_count() == 5);
  CHECK(l.lifted.width() <= 6);
  CHECK(validate_decomposition(l.lifted, to_graph(l.h)).valid());
}

TEST_CASE("lifted width on the L-shape") {
  const Lifted l = lift(t::l_shape());
  CHECK(l.dual.width() == 1);
  CHECK(l.lifted.width() <= 13);
  CHECK(validate_decomposition(l.lifted, to_graph(l.h)).valid());
}

TEST_CASE("lifted decompositions are valid and within 7w+6") {
  std::mt19937_64 rng(17);
  std::vector<OrthoPolygon> polys = t::small_polygons(100, 12, 404);
  polys.push_back(t::plus_grid());
  polys.push_back(t::square_with_hole());
  for (const OrthoPolygon& p : polys) {
    const Pixelation pix = pixelate(p);
    CHECK(validate_decomposition(decompose(dual_graph(pix)), dual_graph(pix)).valid());
    const Lifted full = lift(p);
    CHECK(validate_decomposition(full.lifted, to_graph(full.h)).valid());
    CHECK(full.lifted.width() <= 7 * full.dual.width() + 6);
    const Lifted part = lift(p, subset(pix.all_cross_ids(), rng, 0.6), subset(pix.guard_ids(true, true), rng, 0.6), false);
    CHECK(validate_decomposition(part.lifted, to_graph(part.h)).valid());
    CHECK(part.lifted.width() <= 7 * part.dual.width() + 6);
  }
}

TEST_CASE("validator witnesses") {
  const Lifted l = lift(t::rectangle());
  const Graph g = to_graph(l.h);
  TreeDecomposition broken = l.lifted;
  const std::size_t sigma_h = l.h.sigma_vertex(l.pix.crosses[0].h_support);
  auto& bag = broken.bags[0];
  bag.erase(std::find(bag.begin(), bag.end(), sigma_h));
  const DecompositionCheck check = validate_decomposition(broken, g);
  CHECK(check.violation == DecompositionViolation::kEdgeUncovered);
  CHECK(check.edge == Edge{l.h.cross_vertex(0), sigma_h});

  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  const TreeDecomposition split{{{0, 1}, {1, 2}, {0}}, {npos, 0, 1}};
  const DecompositionCheck dc = validate_decomposition(split, p3);
  CHECK(dc.violation == DecompositionViolation::kDisconnected);
  CHECK(dc.vertex == 0);

  CHECK(validate_decomposition({{{0, 1}}, {}}, p3).violation == DecompositionViolation::kMalformedTree);
  CHECK(validate_decomposition({{{0, 1}, {1, 2}}, {1, 0}}, p3).violation == DecompositionViolation::kMalformedTree);
  CHECK(validate_decomposition({{{0, 1, 2, 7}}, {npos}}, p3).violation == DecompositionViolation::kVertexOutOfRange);
  CHECK(validate_decomposition({{{0, 1}}, {npos}}, Graph(3)).violation == DecompositionViolation::kVertexMissing);
}

TEST_CASE("splitting a vertex across a leaf breaks connectivity") {
  std::mt19937_64 rng(23);
  std::size_t tried = 0;
  for (const OrthoPolygon& p : t::small_polygons(60, 14, 505)) {
    const Lifted l = lift(p);
    const auto children = l.lifted.children();
    for (std::size_t leaf = 0; leaf < l.lifted.node_count(); ++leaf) {
      const std::size_t up = l.lifted.parent[leaf];
      if (!children[leaf].empty() || up == npos) continue;
      // A vertex held elsewhere but neither here nor in the parent.
      std::vector<std::size_t> candidates;
      for (std::size_t v = 0; v < l.h.vertex_count(); ++v) {
        const auto& a = l.lifted.bags[leaf];
        const auto& b = l.lifted.bags[up];
        if (!std::binary_search(a.begin(), a.end(), v) && !std::binary_search(b.begin(), b.end(), v)) candidates.push_back(v);
      }
      if (candidates.empty()) continue;
      const std::size_t v = candidates[rng() % candidates.size()];
      TreeDecomposition broken = l.lifted;
      broken.bags[leaf].insert(std::lower_bound(broken.bags[leaf].begin(), broken.bags[leaf].end(), v), v);
      const DecompositionCheck check = validate_decomposition(broken, to_graph(l.h));
      CHECK(check.violation == DecompositionViolation::kDisconnected);
      CHECK(check.vertex == v);
      ++tried;
      break;
    }
  }
  CHECK(tried >= 20);
}

TEST_CASE("dp on fixed shapes") {
  const Pixelation rect = pixelate(t::rectangle());
  const DpPipeline r = solve_with_treewidth(rect, rect.all_cross_ids(), rect.guard_ids(true, true));
  REQUIRE(r.result.ok());
  CHECK(r.result.solution.size() == 1);
  CHECK(r.result.solution.method == "dp");

  const Pixelation path = pixelate(gen_path_lb(3));
  const DpPipeline p = solve_with_treewidth(path, path.all_cross_ids(), path.guard_ids(true, true));
  REQUIRE(p.result.ok());
  CHECK(p.result.solution.size() == 3);
  CHECK(p.stats.nice_nodes > 0);
  CHECK(p.bags == decompose(dual_graph(path)).node_count());
}

TEST_CASE("dp limits and infeasibility") {
  const Lifted l = lift(gen_comb(3));
  const SolveResult narrow = dp_solve(l.h, l.lifted, {2});
  CHECK(narrow.status == SolveStatus::kWidthExceeded);
  const SolveResult too_wide = dp_solve(l.h, l.lifted, {kHardWidthMax + 5});
  CHECK(too_wide.ok());

  const Pixelation lp = pixelate(t::l_shape());
  std::vector<std::size_t> top;
  for (const GuardSegment& g : lp.guards) {
    if (g.orientation == Orientation::kHorizontal && g.anchor == 2) top.push_back(g.id);
  }
  const DpPipeline bad = solve_with_treewidth(lp, lp.all_cross_ids(), top);
  CHECK(bad.result.status == SolveStatus::kInfeasible);
}

TEST_CASE("dp equals the exact oracle on thin trees and small polygons") {
  std::mt19937_64 rng(71);
  std::vector<OrthoPolygon> polys;
  for (std::uint64_t s = 0; s < 50; ++s) polys.push_back(gen_thin_tree(1 + s % 5, s));
  for (OrthoPolygon& p : t::small_polygons(80, 14, 606)) polys.push_back(std::move(p));
  std::size_t compared = 0;
  for (const OrthoPolygon& p : polys) {
    const Pixelation pix = pixelate(p);
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<std::size_t> crosses = pix.all_cross_ids();
      std::vector<std::size_t> guards = pix.guard_ids(variant != 2, variant != 1);
      if (variant == 0 && rng() % 2) {
        crosses = subset(crosses, rng, 0.6);
        guards = subset(guards, rng, 0.8);
      }
      const SolveResult oracle = brute_force_min_cover(build_instance(pix, crosses, guards));
      const DpPipeline dp = solve_with_treewidth(pix, crosses, guards);
      if (dp.result.status == SolveStatus::kWidthExceeded) continue;
      CHECK(dp.lifted_width <= 7 * dp.dual_width + 6);
      CHECK(dp.result.status == oracle.status);
      if (!oracle.ok()) continue;
      CHECK(dp.result.solution.size() == oracle.solution.size());
      CHECK(verify_cover(pix, dp.result.solution.guards, crosses).covered());
      ++compared;
    }
  }
  CHECK(compared >= 350);
}
