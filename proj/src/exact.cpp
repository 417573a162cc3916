#include "slidecam/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace slidecam {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOk: return "Ok";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kCapExceeded: return "CapExceeded";
    case SolveStatus::kWidthExceeded: return "WidthExceeded";
    case SolveStatus::kBudgetInsufficient: return "BudgetInsufficient";
    case SolveStatus::kNotPathSegmentation: return "NotPathSegmentation";
    case SolveStatus::kPreconditionViolated: return "PreconditionViolated";
    case SolveStatus::kTooLargeForOracle: return "TooLargeForOracle";
  }
  return "Unknown";
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  std::size_t common(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool operator==(const Bits&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<Bits> element_bits(const HittingInstance& inst) {
  std::vector<Bits> bits(inst.universe.size(), Bits(inst.sets.size()));
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (std::size_t e : inst.sets[i]) bits[e].set(i);
  }
  return bits;
}

SolveResult infeasible(const HittingInstance& inst, const std::string& method) {
  SolveResult r;
  r.status = SolveStatus::kInfeasible;
  r.solution.method = method;
  const auto empty = inst.empty_sets();
  r.message = "no candidate hits cross " + std::to_string(inst.cross_ids.at(empty.front()));
  return r;
}

class BranchAndBound {
 public:
  BranchAndBound(const HittingInstance& inst, std::vector<std::size_t> elements)
      : inst_(inst), elements_(std::move(elements)), all_bits_(element_bits(inst)) {
    std::vector<char> alive(inst.universe.size(), 0);
    for (std::size_t e : elements_) alive[e] = 1;
    candidates_.resize(inst.sets.size());
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      for (std::size_t e : inst.sets[i]) {
        if (alive[e]) candidates_[i].push_back(e);
      }
    }
    for (std::size_t e : elements_) max_gain_ = std::max(max_gain_, all_bits_[e].count());
  }

  bool search(std::size_t budget, std::vector<std::size_t>& chosen) {
    Bits uncovered(inst_.sets.size());
    for (std::size_t i = 0; i < inst_.sets.size(); ++i) uncovered.set(i);
    return dfs(uncovered, budget, chosen);
  }

 private:
  bool dfs(const Bits& uncovered, std::size_t budget, std::vector<std::size_t>& chosen) {
    if (uncovered.none()) return true;
    if (budget == 0) return false;
    if (uncovered.count() > budget * max_gain_) return false;
    std::size_t pick = npos;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!uncovered.test(i)) continue;
      if (pick == npos || candidates_[i].size() < candidates_[pick].size()) pick = i;
    }
    for (std::size_t e : candidates_[pick]) {
      Bits next = uncovered;
      next.subtract(all_bits_[e]);
      chosen.push_back(e);
      if (dfs(next, budget - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const HittingInstance& inst_;
  std::vector<std::size_t> elements_;
  std::vector<Bits> all_bits_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::size_t max_gain_ = 0;
};

}  // namespace

std::vector<std::size_t> undominated_elements(const HittingInstance& inst) {
  const std::vector<Bits> bits = element_bits(inst);
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < bits.size(); ++e) {
    if (bits[e].none()) continue;
    bool dominated = false;
    for (std::size_t f = 0; f < bits.size() && !dominated; ++f) {
      if (f == e || !bits[e].subset_of(bits[f])) continue;
      dominated = !(bits[f] == bits[e]) || f < e;
    }
    if (!dominated) kept.push_back(e);
  }
  return kept;
}

SolveResult brute_force_min_cover(const HittingInstance& inst, std::size_t cap) {
  const std::string method = "exact";
  if (!inst.feasible()) return infeasible(inst, method);
  SolveResult result;
  result.solution.method = method;
  if (inst.sets.empty()) return result;
  BranchAndBound search(inst, undominated_elements(inst));
  for (std::size_t k = 1; k <= cap; ++k) {
    std::vector<std::size_t> chosen;
    if (search.search(k, chosen)) {
      result.solution.guards = inst.to_guard_ids(chosen);
      return result;
    }
  }
  result.status = SolveStatus::kCapExceeded;
  result.message = "no cover of size <= " + std::to_string(cap);
  return result;
}

SolveResult greedy_cover(const HittingInstance& inst) {
  const std::string method = "greedy";
  if (!inst.feasible()) return infeasible(inst, method);
  std::vector<Bits> bits = element_bits(inst);
  Bits uncovered(inst.sets.size());
  for (std::size_t i = 0; i < inst.sets.size(); ++i) uncovered.set(i);
  std::vector<std::size_t> chosen;
  while (!uncovered.none()) {
    std::size_t best = npos;
    std::size_t best_gain = 0;
    for (std::size_t e = 0; e < bits.size(); ++e) {
      const std::size_t g = bits[e].common(uncovered);
      if (g > best_gain) {
        best_gain = g;
        best = e;
      }
    }
    chosen.push_back(best);
    uncovered.subtract(bits[best]);
  }
  SolveResult result;
  result.solution.method = method;
  result.solution.guards = inst.to_guard_ids(chosen);
  return result;
}

bool certify(const Pixelation& pix, std::span<const std::size_t> cross_ids, Solution& solution) {
  const CoverageReport report = verify_cover(pix, solution.guards, cross_ids);
  solution.certificate = report.certificate;
  return report.covered();
}

}  // namespace slidecam
