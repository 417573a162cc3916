#include "slidecam/hitset.hpp"

#include <algorithm>
#include <stdexcept>

namespace slidecam {

std::size_t HittingInstance::element_of(std::size_t guard_id) const {
  const auto it = std::find(universe.begin(), universe.end(), guard_id);
  return it == universe.end() ? npos : static_cast<std::size_t>(it - universe.begin());
}

bool HittingInstance::feasible() const {
  return std::none_of(sets.begin(), sets.end(), [](const auto& s) { return s.empty(); });
}

std::vector<std::size_t> HittingInstance::empty_sets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) out.push_back(i);
  }
  return out;
}

bool HittingInstance::is_hitting_set(std::span<const std::size_t> elements) const {
  std::vector<char> chosen(universe.size(), 0);
  for (std::size_t e : elements) chosen.at(e) = 1;
  return std::all_of(sets.begin(), sets.end(), [&](const auto& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t e) { return chosen[e] != 0; });
  });
}

std::vector<std::size_t> HittingInstance::to_guard_ids(std::span<const std::size_t> elements) const {
  std::vector<std::size_t> out;
  out.reserve(elements.size());
  for (std::size_t e : elements) out.push_back(universe.at(e));
  std::sort(out.begin(), out.end());
  return out;
}

HittingInstance build_instance(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                               std::span<const std::size_t> guard_ids) {
  HittingInstance inst;
  inst.universe.assign(guard_ids.begin(), guard_ids.end());
  std::sort(inst.universe.begin(), inst.universe.end());
  inst.universe.erase(std::unique(inst.universe.begin(), inst.universe.end()), inst.universe.end());
  inst.cross_ids.assign(cross_ids.begin(), cross_ids.end());
  inst.weights.assign(inst.universe.size(), 1.0);
  inst.sets.resize(inst.cross_ids.size());
  for (std::size_t i = 0; i < inst.cross_ids.size(); ++i) {
    const Cross& c = pix.crosses.at(inst.cross_ids[i]);
    for (std::size_t e = 0; e < inst.universe.size(); ++e) {
      if (hits(pix.guards.at(inst.universe[e]), c, pix)) inst.sets[i].push_back(e);
    }
  }
  return inst;
}

HittingInstance restrict_universe(const HittingInstance& inst, std::span<const std::size_t> keep) {
  std::vector<std::size_t> remap(inst.universe.size(), npos);
  HittingInstance out;
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t e : sorted) {
    remap.at(e) = out.universe.size();
    out.universe.push_back(inst.universe[e]);
    out.weights.push_back(inst.weights[e]);
  }
  out.cross_ids = inst.cross_ids;
  out.sets.resize(inst.sets.size());
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (std::size_t e : inst.sets[i]) {
      if (remap[e] != npos) out.sets[i].push_back(remap[e]);
    }
  }
  return out;
}

namespace {

bool stabs(const HorizontalTarget& h, const VerticalTarget& v) {
  return 2 * h.x.lo <= v.x.twice && v.x.twice <= 2 * h.x.hi && v.y.lo <= h.y && h.y <= v.y.hi;
}

}  // namespace

bool SegmentCoveringInstance::covers(std::span<const std::size_t> chosen) const {
  return std::all_of(verticals.begin(), verticals.end(), [&](const VerticalTarget& v) {
    return std::any_of(chosen.begin(), chosen.end(), [&](std::size_t h) { return stabs(horizontals.at(h), v); });
  });
}

HittingInstance SegmentCoveringInstance::as_hitting_instance() const {
  HittingInstance inst;
  for (const HorizontalTarget& h : horizontals) inst.universe.push_back(h.guard_id);
  inst.weights.assign(horizontals.size(), 1.0);
  for (const VerticalTarget& v : verticals) {
    inst.cross_ids.push_back(v.sigma_id);
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < horizontals.size(); ++e) {
      if (stabs(horizontals[e], v)) s.push_back(e);
    }
    inst.sets.push_back(std::move(s));
  }
  return inst;
}

SegmentCoveringInstance to_segment_covering(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                                            std::span<const std::size_t> horizontal_guard_ids) {
  SegmentCoveringInstance out;
  for (std::size_t gid : horizontal_guard_ids) {
    const GuardSegment& g = pix.guards.at(gid);
    if (g.orientation != Orientation::kHorizontal) {
      throw std::invalid_argument("segment covering takes horizontal guards only");
    }
    out.horizontals.push_back({gid, g.anchor, g.span});
  }
  std::vector<std::size_t> supports;
  for (std::size_t cid : cross_ids) supports.push_back(pix.crosses.at(cid).v_support);
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  for (std::size_t s : supports) {
    const SliceSegment& sigma = pix.sigma(s);
    out.verticals.push_back({s, sigma.anchor, sigma.span});
  }
  return out;
}

AuxKind AuxiliaryGraph::kind(std::size_t v) const {
  if (v < cross_ids.size()) return AuxKind::kCross;
  if (v < cross_ids.size() + sigma_count) return AuxKind::kSigma;
  return AuxKind::kGuard;
}

std::size_t AuxiliaryGraph::ref(std::size_t v) const {
  switch (kind(v)) {
    case AuxKind::kCross: return cross_ids[v];
    case AuxKind::kSigma: return v - cross_ids.size();
    case AuxKind::kGuard: return guard_ids[v - cross_ids.size() - sigma_count];
  }
  return npos;
}

std::size_t AuxiliaryGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency) total += adj.size();
  return total / 2;
}

bool AuxiliaryGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

bool AuxiliaryGraph::dominates_within_two(std::span<const std::size_t> guard_vertex_ids) const {
  std::vector<char> chosen(vertex_count(), 0);
  for (std::size_t v : guard_vertex_ids) chosen.at(v) = 1;
  for (std::size_t k = 0; k < cross_ids.size(); ++k) {
    bool reached = false;
    for (std::size_t s : adjacency[cross_vertex(k)]) {
      for (std::size_t g : adjacency[s]) {
        if (chosen[g] && kind(g) == AuxKind::kGuard) reached = true;
      }
    }
    if (!reached) return false;
  }
  return true;
}

AuxiliaryGraph build_auxiliary_graph(const Pixelation& pix, std::span<const std::size_t> cross_ids,
                                     std::span<const std::size_t> guard_ids) {
  AuxiliaryGraph h;
  h.cross_ids.assign(cross_ids.begin(), cross_ids.end());
  h.guard_ids.assign(guard_ids.begin(), guard_ids.end());
  h.sigma_count = pix.sigma_count();
  h.adjacency.resize(h.cross_ids.size() + h.sigma_count + h.guard_ids.size());
  auto link = [&](std::size_t a, std::size_t b) {
    h.adjacency[a].push_back(b);
    h.adjacency[b].push_back(a);
  };
  for (std::size_t k = 0; k < h.cross_ids.size(); ++k) {
    const Cross& c = pix.crosses.at(h.cross_ids[k]);
    link(h.cross_vertex(k), h.sigma_vertex(c.h_support));
    link(h.cross_vertex(k), h.sigma_vertex(c.v_support));
  }
  for (std::size_t k = 0; k < h.guard_ids.size(); ++k) {
    const GuardSegment& g = pix.guards.at(h.guard_ids[k]);
    for (std::size_t s = 0; s < h.sigma_count; ++s) {
      if (intersects(g, pix.sigma(s))) link(h.guard_vertex(k), h.sigma_vertex(s));
    }
  }
  for (auto& adj : h.adjacency) std::sort(adj.begin(), adj.end());
  return h;
}

}  // namespace slidecam
