#pragma once

// Ground-truth solvers for hitting-set instances: an exact branch-and-bound
// search and a greedy baseline. Shared result types live here too.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "slidecam/hitset.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam {

enum class SolveStatus {
  kOk,
  kInfeasible,
  kCapExceeded,
  kWidthExceeded,
  kBudgetInsufficient,
  kNotPathSegmentation,
  kPreconditionViolated,
  kTooLargeForOracle,
};

std::string to_string(SolveStatus status);

struct Solution {
  std::vector<std::size_t> guards;  // sorted guard ids
  std::vector<CoverageWitness> certificate;
  std::string method;
  std::size_t size() const { return guards.size(); }
};

struct SolveResult {
  SolveStatus status = SolveStatus::kOk;
  Solution solution;
  std::string message;
  bool ok() const { return status == SolveStatus::kOk; }
};

// Elements that survive dominance pruning: e is dropped when another element
// hits a superset of e's sets (ties keep the smaller index).
std::vector<std::size_t> undominated_elements(const HittingInstance& inst);

// Minimum-cardinality hitting set by iterative deepening over the cover size,
// branching on the uncovered set with fewest candidates.
SolveResult brute_force_min_cover(const HittingInstance& inst, std::size_t cap = 64);

SolveResult greedy_cover(const HittingInstance& inst);

// Fills solution.certificate from the geometry. Returns false when some cross
// in cross_ids is left uncovered.
bool certify(const Pixelation& pix, std::span<const std::size_t> cross_ids, Solution& solution);

}  // namespace slidecam
