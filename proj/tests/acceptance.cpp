// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "slidecam/approx.hpp"
#include "slidecam/gallery.hpp"
#include "slidecam/treewidth.hpp"
#include "support.hpp"

using namespace slidecam;
namespace t = slidecam::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Gate {
 public:
  void run(int id, const std::string& name, double limit_s, const std::function<Verdict()>& body) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
      v.pass = false;
      v.detail += " [over time limit " + fmt(limit_s) + "s]";
    }
    std::printf("criterion %d %-34s %s  %s (%.2fs)\n", id, name.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str(), secs);
    std::fflush(stdout);
    failed_ += v.pass ? 0 : 1;
  }
  int failed() const { return failed_; }

  static std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

 private:
  int failed_ = 0;
};

std::size_t opt(const Pixelation& pix, bool h, bool v) { return t::exact_opt(pix, h, v); }

HittingInstance full_instance(const Pixelation& pix) {
  const auto c = pix.all_cross_ids();
  const auto g = pix.guard_ids(true, true);
  return build_instance(pix, c, g);
}

bool single_camera_covers(const OrthoPolygon& p, const SmallGuard& g) {
  if (!g.ok()) return false;
  const Pixelation pix = pixelate(p);
  if (g.camera.id >= pix.guards.size()) return false;
  const GuardSegment& c = pix.guards[g.camera.id];
  if (c.orientation != g.camera.orientation || c.anchor != g.camera.anchor || c.span != g.camera.span) return false;
  // Coverage through the camera's own visibility, not through the guard table.
  auto seen = visible_region(pix, c.orientation, c.anchor, c.span);
  return seen.size() == pix.pixels.size();
}

Verdict comb_tightness() {
  Verdict v;
  std::ostringstream os;
  for (std::size_t k = 2; k <= 5; ++k) {
    const OrthoPolygon p = gen_comb(k);
    const std::size_t n = p.vertex_count();
    const Pixelation pix = pixelate(p);
    const std::size_t mhsc = opt(pix, true, false), msc = opt(pix, true, true);
    os << "k=" << k << ":mhsc=" << mhsc << ",msc=" << msc << " ";
    if (n != 4 * k || mhsc != k || mhsc != n / 4 || msc != 1) v.pass = false;
  }
  v.detail = os.str();
  return v;
}

Verdict path_tightness() {
  Verdict v;
  std::ostringstream os;
  for (std::size_t k = 1; k <= 4; ++k) {
    const OrthoPolygon p = gen_path_lb(k);
    const std::size_t n = p.vertex_count();
    const Pixelation pix = pixelate(p);
    const std::size_t msc = opt(pix, true, true);
    const PathGuard pg = path_guard(p);
    const std::size_t peel = pg.result.ok() ? pg.result.solution.size() : 0;
    os << "k=" << k << ":n=" << n << ",msc=" << msc << ",peel=" << peel << " ";
    if (msc != k || (n + 2) / 6 != k || !pg.result.ok() || peel != k) v.pass = false;
  }
  v.detail = os.str();
  return v;
}

Verdict bound_sweep() {
  std::size_t violations = 0, unchecked = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 4 + 2 * (s % 6);  // 4..14
    const BoundReport r = check_bounds(gen_random_simple(n, 1000 + s));
    if (r.status != SolveStatus::kOk) ++unchecked;
    else if (!r.ok()) ++violations;
  }
  return {violations == 0 && unchecked == 0,
          "200 polygons, violations=" + std::to_string(violations) + " unchecked=" + std::to_string(unchecked)};
}

Verdict dp_vs_oracle() {
  std::size_t mismatches = 0, width_violations = 0, thin = 0, random = 0, max_width = 0;
  auto check = [&](const OrthoPolygon& p, std::size_t width_cap) {
    const Pixelation pix = pixelate(p);
    const auto c = pix.all_cross_ids();
    const auto g = pix.guard_ids(true, true);
    const AuxiliaryGraph h = build_auxiliary_graph(pix, c, g);
    const TreeDecomposition dual = decompose(dual_graph(pix));
    const TreeDecomposition lifted = lift_decomposition(dual, h, pix);
    if (lifted.width() > width_cap) return false;
    if (!validate_decomposition(lifted, to_graph(h)).valid() || lifted.width() > 7 * dual.width() + 6) ++width_violations;
    max_width = std::max(max_width, lifted.width());
    const DpPipeline dp = solve_with_treewidth(pix, c, g);
    const SolveResult oracle = brute_force_min_cover(build_instance(pix, c, g));
    if (!dp.result.ok() || !oracle.ok() || dp.result.solution.size() != oracle.solution.size()) ++mismatches;
    return true;
  };
  for (std::uint64_t s = 0; thin < 50; ++s) {
    const OrthoPolygon p = gen_thin_tree(1 + s % 5, 2000 + s);
    if (!is_thin(pixelate(p)) || p.has_holes()) throw std::runtime_error("thin generator produced a non-thin polygon");
    thin += check(p, kDefaultWidthMax);
  }
  std::uint64_t seed = 3000;
  while (random < 50) {
    for (const OrthoPolygon& p : t::small_polygons(10, 14, seed++)) {
      if (random < 50 && check(p, 13)) ++random;
    }
  }
  return {mismatches == 0 && width_violations == 0,
          "thin=" + std::to_string(thin) + " random=" + std::to_string(random) + " mismatches=" +
              std::to_string(mismatches) + " width_violations=" + std::to_string(width_violations) +
              " max_lifted_width=" + std::to_string(max_width)};
}

Verdict approximation() {
  std::size_t invalid = 0, over_bound = 0, done = 0;
  double max_ratio = 0, sum_ratio = 0;
  std::ostringstream table;
  for (const OrthoPolygon& p : t::small_polygons(200, 14, 4000)) {
    const Pixelation pix = pixelate(p);
    const HittingInstance inst = full_instance(pix);
    const ApproxReport rep = bg_hitting_set(inst, {done});
    ++done;
    if (!rep.result.ok() || !verify_cover(pix, rep.result.solution.guards, pix.all_cross_ids()).covered()) {
      ++invalid;
      continue;
    }
    const double ratio = static_cast<double>(rep.result.solution.size()) / static_cast<double>(opt(pix, true, true));
    max_ratio = std::max(max_ratio, ratio);
    sum_ratio += ratio;
    if (ratio > rep.ratio_bound) ++over_bound;
  }
  std::printf("  bg benchmark: instances=%zu mean_ratio=%.3f max_ratio=%.3f\n", done, sum_ratio / done, max_ratio);
  return {invalid == 0 && over_bound == 0, "valid=" + std::to_string(done - invalid) + "/" + std::to_string(done) +
                                               " over_bound=" + std::to_string(over_bound) +
                                               " max_ratio=" + Gate::fmt(max_ratio)};
}

Verdict net_property() {
  std::mt19937_64 rng(5000);
  std::size_t violations = 0, heavy_checked = 0, count = 0;
  for (const OrthoPolygon& p : t::small_polygons(200, 14, 5000)) {
    const Pixelation pix = pixelate(p);
    HittingInstance inst = full_instance(pix);
    std::uniform_int_distribution<int> w(1, 16);
    for (double& x : inst.weights) x = w(rng);
    const double r = 1.0 + static_cast<double>(rng() % (2 * inst.sets.size()));
    const NetResult net = find_net(inst, {r, count++, net_budget(r, inst.sets.size())});
    if (!net.ok()) {
      ++violations;
      continue;
    }
    double total = 0;
    for (double x : inst.weights) total += x;
    for (const auto& s : inst.sets) {
      double sw = 0;
      bool hit = false;
      for (std::size_t e : s) {
        sw += inst.weights[e];
        hit = hit || std::binary_search(net.net.begin(), net.net.end(), e);
      }
      if (sw * r < total) continue;
      ++heavy_checked;
      if (!hit) ++violations;
    }
  }
  return {violations == 0, "instances=" + std::to_string(count) + " heavy_sets=" + std::to_string(heavy_checked) +
                               " violations=" + std::to_string(violations)};
}

std::vector<OrthoPolygon> all_test_polygons() {
  std::vector<OrthoPolygon> out{t::rectangle(), t::l_shape(), t::staircase8(), t::square_with_hole(), t::plus_grid()};
  for (std::size_t k = 1; k <= 5; ++k) out.push_back(gen_comb(k));
  for (std::size_t k = 1; k <= 4; ++k) out.push_back(gen_path_lb(k));
  for (OrthoPolygon& p : t::small_polygons(200, 14, 1000)) out.push_back(std::move(p));
  for (OrthoPolygon& p : lattice_polygons(4, 4, 8)) out.push_back(std::move(p));
  for (std::uint64_t s = 0; s < 50; ++s) {
    out.push_back(gen_thin_tree(1 + s % 5, 2000 + s));
    out.push_back(gen_random_monotone(4 + 2 * (s % 11), s));
    out.push_back(t::random_cell_polygon(s, 6, 6));
  }
  return out;
}

Verdict visibility_equals_hits() {
  std::size_t polygons = 0, pairs = 0, mismatches = 0;
  for (const OrthoPolygon& p : all_test_polygons()) {
    const Pixelation pix = pixelate(p);
    if (pix.crosses.size() > 200) continue;
    ++polygons;
    for (const GuardSegment& g : pix.guards) {
      std::vector<char> seen(pix.crosses.size(), 0);
      for (std::size_t px : visible_region(pix, g)) seen[px] = 1;
      for (std::size_t c = 0; c < pix.crosses.size(); ++c) {
        ++pairs;
        if ((seen[pix.crosses[c].pixel_id] != 0) != hits(g, pix.crosses[c], pix)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, "polygons=" + std::to_string(polygons) + " pairs=" + std::to_string(pairs) +
                               " mismatches=" + std::to_string(mismatches)};
}

Verdict covering_equivalence() {
  std::size_t mismatches = 0;
  for (const OrthoPolygon& p : t::small_polygons(100, 12, 6000)) {
    const Pixelation pix = pixelate(p);
    const auto c = pix.all_cross_ids();
    const auto h = pix.guard_ids(true, false);
    const SolveResult cover = brute_force_min_cover(to_segment_covering(pix, c, h).as_hitting_instance());
    const SolveResult mhsc = brute_force_min_cover(build_instance(pix, c, h));
    if (!cover.ok() || !mhsc.ok() || cover.solution.size() != mhsc.solution.size()) ++mismatches;
  }
  return {mismatches == 0, "100 polygons, mismatches=" + std::to_string(mismatches)};
}

Verdict single_camera() {
  std::size_t failures = 0, lattice = 0;
  for (const OrthoPolygon& p : lattice_polygons(4, 4, 8)) {
    ++lattice;
    failures += !single_camera_covers(p, guard_small(p));
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    const OrthoPolygon p = gen_random_simple(4 + 2 * (s % 3), 7000 + s);
    failures += !single_camera_covers(p, guard_small(p));
  }
  return {failures == 0, "lattice=" + std::to_string(lattice) + " random=100 failures=" + std::to_string(failures)};
}

// Least-squares line of DP time against bag count on combs, whose dual width stays fixed.
void dp_runtime_fit() {
  std::vector<double> xs, ys;
  std::size_t width = 0;
  for (std::size_t k = 8; k <= 128; k += 8) {
    const Pixelation pix = pixelate(gen_comb(k));
    const auto c = pix.all_cross_ids();
    const auto g = pix.guard_ids(true, true);
    double best = 1e300;
    DpPipeline dp;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = Clock::now();
      dp = solve_with_treewidth(pix, c, g);
      best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    }
    width = std::max(width, dp.dual_width);
    xs.push_back(static_cast<double>(dp.bags));
    ys.push_back(best);
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  const double r = (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  std::printf("info dp runtime vs bags (dual width %zu): ms = %.5f * bags %+.4f, r^2 = %.4f over %zu sizes\n", width,
              slope, intercept, r * r, xs.size());
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "comb tightness", 10, comb_tightness);
  gate.run(2, "path bound tightness", 30, path_tightness);
  gate.run(3, "upper-bound sweep", 300, bound_sweep);
  gate.run(4, "treewidth dp equals oracle", 300, dp_vs_oracle);
  gate.run(5, "approximation validity", 0, approximation);
  gate.run(6, "net property", 0, net_property);
  gate.run(7, "visibility equals hitting", 0, visibility_equals_hits);
  gate.run(8, "segment covering equivalence", 0, covering_equivalence);
  gate.run(9, "single camera totality", 0, single_camera);
  dp_runtime_fit();
  std::printf("%s: %d of 9 criteria failed\n", gate.failed() == 0 ? "ACCEPTED" : "REJECTED", gate.failed());
  return gate.failed() == 0 ? 0 : 1;
}
