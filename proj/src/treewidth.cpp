#include "slidecam/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace slidecam {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacency_) total += adj.size();
  return total / 2;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  auto insert = [](std::vector<std::size_t>& adj, std::size_t v) {
    const auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v) adj.insert(it, v);
  };
  insert(adjacency_.at(a), b);
  insert(adjacency_.at(b), a);
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (std::size_t b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Graph::connected() const {
  if (adjacency_.empty()) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency_.size();
}

std::size_t TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

std::size_t TreeDecomposition::root() const {
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] == npos) return i;
  }
  return npos;
}

std::vector<std::vector<std::size_t>> TreeDecomposition::children() const {
  std::vector<std::vector<std::size_t>> out(bags.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] != npos) out.at(parent[i]).push_back(i);
  }
  return out;
}

Graph dual_graph(const Pixelation& pix) {
  Graph g(pix.pixels.size());
  for (const auto& [a, b] : pix.dual_edges) g.add_edge(a, b);
  return g;
}

Graph to_graph(const AuxiliaryGraph& h) {
  Graph g(h.vertex_count());
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    for (std::size_t w : h.adjacency[v]) {
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

TreeDecomposition decompose(const Graph& g) {
  const std::size_t n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    td.parent.push_back(npos);
    return td;
  }
  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> eliminated(n, 0);
  std::vector<std::size_t> order;
  std::vector<std::size_t> position(n, npos);
  td.bags.resize(n);

  auto fill_in = [&](std::size_t v) {
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
      for (auto b = std::next(a); b != adj[v].end(); ++b) {
        if (!adj[*a].count(*b)) ++missing;
      }
    }
    return missing;
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = npos;
    std::size_t best_fill = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      const std::size_t f = fill_in(v);
      if (best == npos || f < best_fill || (f == best_fill && adj[v].size() < adj[best].size())) {
        best = v;
        best_fill = f;
      }
    }
    std::vector<std::size_t> bag(adj[best].begin(), adj[best].end());
    for (std::size_t a : bag) {
      for (std::size_t b : bag) {
        if (a != b) adj[a].insert(b);
      }
      adj[a].erase(best);
    }
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    position[best] = step;
    order.push_back(best);
    td.bags[step] = std::move(bag);
    eliminated[best] = 1;
  }

  // Node of v hangs below the node of its earliest-eliminated later neighbour.
  td.parent.assign(n, npos);
  std::size_t last_root = npos;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = order[step];
    std::size_t up = npos;
    for (std::size_t w : td.bags[step]) {
      if (w != v && (up == npos || position[w] < up)) up = position[w];
    }
    td.parent[step] = up;
  }
  // Separate components are chained under one root; their bags are disjoint.
  for (std::size_t step = n; step-- > 0;) {
    if (td.parent[step] != npos) continue;
    if (last_root != npos) td.parent[step] = last_root;
    else last_root = step;
  }
  return td;
}

TreeDecomposition lift_decomposition(const TreeDecomposition& td_dual, const AuxiliaryGraph& h, const Pixelation& pix) {
  std::vector<std::size_t> cross_vertex(pix.crosses.size(), npos);
  for (std::size_t k = 0; k < h.cross_ids.size(); ++k) cross_vertex.at(h.cross_ids[k]) = h.cross_vertex(k);
  std::vector<std::size_t> guard_vertex(pix.guards.size(), npos);
  for (std::size_t k = 0; k < h.guard_ids.size(); ++k) guard_vertex.at(h.guard_ids[k]) = h.guard_vertex(k);

  // Items contributed by each pixel, computed once.
  std::vector<std::vector<std::size_t>> items(pix.pixels.size());
  for (std::size_t p = 0; p < pix.pixels.size(); ++p) {
    std::vector<std::size_t>& out = items[p];
    const Cross& c = pix.crosses[p];
    if (cross_vertex[p] != npos) out.push_back(cross_vertex[p]);
    out.push_back(h.sigma_vertex(c.h_support));
    out.push_back(h.sigma_vertex(c.v_support));
    const Rect& r = pix.pixels[p].rect;
    const struct {
      Orientation o;
      Coord anchor;
      Interval span;
    } sides[4] = {{Orientation::kHorizontal, r.y1, r.x_range()},
                  {Orientation::kHorizontal, r.y2, r.x_range()},
                  {Orientation::kVertical, r.x1, r.y_range()},
                  {Orientation::kVertical, r.x2, r.y_range()}};
    for (const auto& side : sides) {
      const std::size_t raw = pix.locate_raw(side.o, side.anchor, side.span);
      if (raw == npos) continue;
      const RawSegment& seg = pix.raw_segments[raw];
      if (seg.guard == npos) continue;
      const GuardSegment& g = pix.guards[seg.guard];
      // Only the canonical run itself lies along this side.
      if (g.anchor != seg.anchor || g.span.lo != seg.span.lo || g.span.hi != seg.span.hi) continue;
      if (guard_vertex[g.id] != npos) out.push_back(guard_vertex[g.id]);
    }
  }

  TreeDecomposition lifted;
  lifted.parent = td_dual.parent;
  lifted.bags.reserve(td_dual.bags.size());
  for (const auto& bag : td_dual.bags) {
    std::vector<std::size_t> lb;
    for (std::size_t p : bag) lb.insert(lb.end(), items.at(p).begin(), items.at(p).end());
    std::sort(lb.begin(), lb.end());
    lb.erase(std::unique(lb.begin(), lb.end()), lb.end());
    lifted.bags.push_back(std::move(lb));
  }
  return lifted;
}

std::string to_string(DecompositionViolation v) {
  switch (v) {
    case DecompositionViolation::kNone: return "none";
    case DecompositionViolation::kMalformedTree: return "malformed-tree";
    case DecompositionViolation::kVertexOutOfRange: return "vertex-out-of-range";
    case DecompositionViolation::kVertexMissing: return "vertex-missing";
    case DecompositionViolation::kDisconnected: return "disconnected";
    case DecompositionViolation::kEdgeUncovered: return "edge-uncovered";
  }
  return "unknown";
}

DecompositionCheck validate_decomposition(const TreeDecomposition& td, const Graph& g) {
  DecompositionCheck check;
  const std::size_t m = td.bags.size();
  if (td.parent.size() != m || m == 0) {
    check.violation = DecompositionViolation::kMalformedTree;
    return check;
  }
  // Exactly one root and no cycles.
  std::size_t roots = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (td.parent[i] == npos) ++roots;
    else if (td.parent[i] >= m) roots = m + 1;
  }
  if (roots != 1) {
    check.violation = DecompositionViolation::kMalformedTree;
    return check;
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t steps = 0;
    for (std::size_t t = i; t != npos; t = td.parent[t]) {
      if (++steps > m) {
        check.violation = DecompositionViolation::kMalformedTree;
        return check;
      }
    }
  }

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> holders(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v : td.bags[i]) {
      if (v >= n) {
        check.violation = DecompositionViolation::kVertexOutOfRange;
        check.vertex = v;
        return check;
      }
      holders[v].push_back(i);
    }
  }
  // Edges first: a dropped vertex with neighbours is reported through an edge.
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (std::size_t i : holders[e.first]) {
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), e.second)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      check.violation = DecompositionViolation::kEdgeUncovered;
      check.edge = e;
      return check;
    }
  }
  std::vector<char> in_set(m, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (holders[v].empty()) {
      check.violation = DecompositionViolation::kVertexMissing;
      check.vertex = v;
      return check;
    }
    // Bags holding v are connected iff exactly one of them has a parent outside the set.
    for (std::size_t i : holders[v]) in_set[i] = 1;
    std::size_t tops = 0;
    for (std::size_t i : holders[v]) {
      if (td.parent[i] == npos || !in_set[td.parent[i]]) ++tops;
    }
    for (std::size_t i : holders[v]) in_set[i] = 0;
    if (tops != 1) {
      check.violation = DecompositionViolation::kDisconnected;
      check.vertex = v;
      return check;
    }
  }
  return check;
}

namespace {

enum class NiceKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NiceKind kind = NiceKind::kLeaf;
  std::vector<std::size_t> bag;  // sorted
  std::size_t vertex = npos;     // introduced or forgotten vertex
  std::size_t left = npos;
  std::size_t right = npos;
};

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td), children_(td.children()) {}

  // Returns the nice tree; the last node is the root with an empty bag.
  std::vector<NiceNode> build() {
    morph(convert(td_.root()), {});
    return std::move(nodes_);
  }

 private:
  std::size_t add(NiceNode node) {
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  // Chain of forgets then introduces from the bag of `from` to `target`.
  std::size_t morph(std::size_t from, const std::vector<std::size_t>& target) {
    std::vector<std::size_t> bag = nodes_[from].bag;
    for (std::size_t v : std::vector<std::size_t>(bag)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      from = add({NiceKind::kForget, bag, v, from, npos});
    }
    for (std::size_t v : target) {
      if (std::binary_search(bag.begin(), bag.end(), v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      from = add({NiceKind::kIntroduce, bag, v, from, npos});
    }
    return from;
  }

  std::size_t convert(std::size_t t) {
    const std::vector<std::size_t>& bag = td_.bags[t];
    std::vector<std::size_t> branches;
    for (std::size_t child : children_[t]) branches.push_back(morph(convert(child), bag));
    if (branches.empty()) branches.push_back(morph(add({NiceKind::kLeaf, {}, npos, npos, npos}), bag));
    std::size_t acc = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) acc = add({NiceKind::kJoin, bag, npos, acc, branches[i]});
    return acc;
  }

  const TreeDecomposition& td_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<NiceNode> nodes_;
};

// Per-slot states, two bits each.
constexpr std::uint64_t kGuardOff = 0, kGuardOn = 1;
constexpr std::uint64_t kSigmaFree = 0, kSigmaRequired = 1, kSigmaHit = 2;
constexpr std::uint64_t kCrossPending = 0, kCrossSatisfied = 1;

std::uint64_t get(std::uint64_t key, std::size_t slot) { return (key >> (2 * slot)) & 3U; }
std::uint64_t put(std::uint64_t key, std::size_t slot, std::uint64_t value) {
  return (key & ~(std::uint64_t{3} << (2 * slot))) | (value << (2 * slot));
}
// Remove slot, shifting the higher slots down.
std::uint64_t drop(std::uint64_t key, std::size_t slot) {
  const std::uint64_t low = slot == 0 ? 0 : key & ((std::uint64_t{1} << (2 * slot)) - 1);
  const std::uint64_t high = 2 * (slot + 1) >= 64 ? 0 : key >> (2 * (slot + 1));
  return low | (high << (2 * slot));
}
// Open a zero slot at position `slot`.
std::uint64_t open(std::uint64_t key, std::size_t slot) {
  const std::uint64_t low = slot == 0 ? 0 : key & ((std::uint64_t{1} << (2 * slot)) - 1);
  const std::uint64_t high = 2 * (slot + 1) >= 64 ? 0 : key >> (2 * slot);
  return low | (high << (2 * (slot + 1)));
}

struct Entry {
  std::size_t value = 0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

using Table = std::unordered_map<std::uint64_t, Entry>;

void relax(Table& table, std::uint64_t key, std::size_t value, std::uint64_t left, std::uint64_t right = 0) {
  auto [it, fresh] = table.try_emplace(key, Entry{value, left, right});
  if (!fresh && value < it->second.value) it->second = Entry{value, left, right};
}

class DpRunner {
 public:
  DpRunner(const AuxiliaryGraph& h, std::vector<NiceNode> nodes) : h_(h), nodes_(std::move(nodes)), tables_(nodes_.size()) {}

  void run(DpStats* stats) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      switch (nodes_[i].kind) {
        case NiceKind::kLeaf: tables_[i][0] = Entry{0, 0, 0}; break;
        case NiceKind::kIntroduce: introduce(i); break;
        case NiceKind::kForget: forget(i); break;
        case NiceKind::kJoin: join(i); break;
      }
      if (stats) {
        stats->max_table = std::max(stats->max_table, tables_[i].size());
        stats->table_entries += tables_[i].size();
      }
    }
    if (stats) stats->nice_nodes = nodes_.size();
  }

  bool feasible() const { return tables_.back().count(0) > 0; }

  std::vector<std::size_t> traceback() const {
    std::vector<std::size_t> chosen;
    std::vector<std::pair<std::size_t, std::uint64_t>> stack{{nodes_.size() - 1, 0}};
    while (!stack.empty()) {
      const auto [i, key] = stack.back();
      stack.pop_back();
      const NiceNode& node = nodes_[i];
      const Entry& e = tables_[i].at(key);
      switch (node.kind) {
        case NiceKind::kLeaf: break;
        case NiceKind::kIntroduce: stack.emplace_back(node.left, e.left); break;
        case NiceKind::kForget: {
          const std::size_t slot = slot_of(nodes_[node.left].bag, node.vertex);
          if (h_.kind(node.vertex) == AuxKind::kGuard && get(e.left, slot) == kGuardOn) chosen.push_back(node.vertex);
          stack.emplace_back(node.left, e.left);
          break;
        }
        case NiceKind::kJoin:
          stack.emplace_back(node.left, e.left);
          stack.emplace_back(node.right, e.right);
          break;
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  static std::size_t slot_of(const std::vector<std::size_t>& bag, std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void introduce(std::size_t i) {
    const NiceNode& node = nodes_[i];
    const std::vector<std::size_t>& bag = node.bag;
    const std::size_t v = node.vertex;
    const std::size_t vs = slot_of(bag, v);
    Table& out = tables_[i];
    const AuxKind kind = h_.kind(v);
    for (const auto& [child_key, entry] : tables_[node.left]) {
      const std::uint64_t base = open(child_key, vs);
      if (kind == AuxKind::kGuard) {
        relax(out, put(base, vs, kGuardOff), entry.value, child_key);
        std::uint64_t key = put(base, vs, kGuardOn);
        for (std::size_t s = 0; s < bag.size(); ++s) {
          if (h_.kind(bag[s]) == AuxKind::kSigma && h_.adjacent(v, bag[s])) key = put(key, s, kSigmaHit);
        }
        relax(out, satisfy_from_hit(bag, key), entry.value + 1, child_key);
      } else if (kind == AuxKind::kSigma) {
        bool hit = false;
        for (std::size_t s = 0; s < bag.size(); ++s) {
          if (h_.kind(bag[s]) == AuxKind::kGuard && h_.adjacent(v, bag[s]) && get(base, s) == kGuardOn) hit = true;
        }
        // Either promise that sigma gets hit and satisfy every neighbouring cross now, or promise nothing.
        std::uint64_t committed = put(base, vs, hit ? kSigmaHit : kSigmaRequired);
        for (std::size_t s = 0; s < bag.size(); ++s) {
          if (h_.kind(bag[s]) == AuxKind::kCross && h_.adjacent(v, bag[s])) committed = put(committed, s, kCrossSatisfied);
        }
        relax(out, committed, entry.value, child_key);
        if (!hit) relax(out, put(base, vs, kSigmaFree), entry.value, child_key);
      } else {
        bool satisfied = false;
        std::vector<std::size_t> free_supports;
        for (std::size_t s = 0; s < bag.size(); ++s) {
          if (h_.kind(bag[s]) != AuxKind::kSigma || !h_.adjacent(v, bag[s])) continue;
          const std::uint64_t st = get(base, s);
          if (st == kSigmaFree) free_supports.push_back(s);
          else satisfied = true;
        }
        if (satisfied) {
          relax(out, put(base, vs, kCrossSatisfied), entry.value, child_key);
          continue;
        }
        relax(out, put(base, vs, kCrossPending), entry.value, child_key);
        for (std::size_t s : free_supports) {
          relax(out, put(put(base, vs, kCrossSatisfied), s, kSigmaRequired), entry.value, child_key);
        }
      }
    }
  }

  // A pending cross next to a hit slice-segment is satisfied for free.
  std::uint64_t satisfy_from_hit(const std::vector<std::size_t>& bag, std::uint64_t key) const {
    for (std::size_t c = 0; c < bag.size(); ++c) {
      if (h_.kind(bag[c]) != AuxKind::kCross || get(key, c) != kCrossPending) continue;
      for (std::size_t s = 0; s < bag.size(); ++s) {
        if (h_.kind(bag[s]) == AuxKind::kSigma && get(key, s) == kSigmaHit && h_.adjacent(bag[c], bag[s])) {
          key = put(key, c, kCrossSatisfied);
          break;
        }
      }
    }
    return key;
  }

  void forget(std::size_t i) {
    const NiceNode& node = nodes_[i];
    const std::size_t slot = slot_of(nodes_[node.left].bag, node.vertex);
    const AuxKind kind = h_.kind(node.vertex);
    Table& out = tables_[i];
    for (const auto& [child_key, entry] : tables_[node.left]) {
      const std::uint64_t st = get(child_key, slot);
      if (kind == AuxKind::kCross && st == kCrossPending) continue;
      if (kind == AuxKind::kSigma && st == kSigmaRequired) continue;
      relax(out, drop(child_key, slot), entry.value, child_key);
    }
  }

  void join(std::size_t i) {
    const NiceNode& node = nodes_[i];
    const std::vector<std::size_t>& bag = node.bag;
    std::uint64_t guard_mask = 0;
    for (std::size_t s = 0; s < bag.size(); ++s) {
      if (h_.kind(bag[s]) == AuxKind::kGuard) guard_mask |= std::uint64_t{3} << (2 * s);
    }
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Entry>>> right_by_guards;
    for (const auto& [key, entry] : tables_[node.right]) right_by_guards[key & guard_mask].emplace_back(key, entry);
    Table& out = tables_[i];
    for (const auto& [lkey, lentry] : tables_[node.left]) {
      const auto it = right_by_guards.find(lkey & guard_mask);
      if (it == right_by_guards.end()) continue;
      const std::size_t selected = static_cast<std::size_t>(std::popcount(lkey & guard_mask));
      for (const auto& [rkey, rentry] : it->second) {
        std::uint64_t key = lkey & guard_mask;
        for (std::size_t s = 0; s < bag.size(); ++s) {
          const AuxKind k = h_.kind(bag[s]);
          if (k == AuxKind::kGuard) continue;
          key = put(key, s, std::max(get(lkey, s), get(rkey, s)));
        }
        key = satisfy_from_hit(bag, key);
        relax(out, key, lentry.value + rentry.value - selected, lkey, rkey);
      }
    }
  }

  const AuxiliaryGraph& h_;
  std::vector<NiceNode> nodes_;
  std::vector<Table> tables_;
};

}  // namespace

SolveResult dp_solve(const AuxiliaryGraph& h, const TreeDecomposition& td_h, const DpOptions& options, DpStats* stats) {
  SolveResult result;
  result.solution.method = "dp";
  const std::size_t cap = std::min(options.width_max, kHardWidthMax);
  if (td_h.width() > cap) {
    result.status = SolveStatus::kWidthExceeded;
    result.message = "decomposition width " + std::to_string(td_h.width()) + " exceeds limit " + std::to_string(cap);
    return result;
  }
  DpRunner runner(h, NiceBuilder(td_h).build());
  runner.run(stats);
  if (!runner.feasible()) {
    result.status = SolveStatus::kInfeasible;
    result.message = "some cross has no kept guard at distance two";
    return result;
  }
  for (std::size_t v : runner.traceback()) result.solution.guards.push_back(h.ref(v));
  std::sort(result.solution.guards.begin(), result.solution.guards.end());
  return result;
}

DpPipeline solve_with_treewidth(const Pixelation& pix, const std::vector<std::size_t>& cross_ids,
                                const std::vector<std::size_t>& guard_ids, const DpOptions& options) {
  DpPipeline out;
  const TreeDecomposition td_dual = decompose(dual_graph(pix));
  const AuxiliaryGraph h = build_auxiliary_graph(pix, cross_ids, guard_ids);
  const TreeDecomposition td_h = lift_decomposition(td_dual, h, pix);
  out.dual_width = td_dual.width();
  out.lifted_width = td_h.width();
  out.bags = td_h.node_count();
  out.result = dp_solve(h, td_h, options, &out.stats);
  if (out.result.ok() && !certify(pix, cross_ids, out.result.solution)) {
    throw std::logic_error("dp selection fails geometric verification");
  }
  return out;
}

}  // namespace slidecam
