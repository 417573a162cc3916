#pragma once

// Approximation through weighted epsilon-nets and iterative reweighting.
//
// A (1/r)-net of a weighted hitting-set instance is a subset of elements that
// meets every set whose weight is at least W/r, W being the total weight. The
// net finder samples elements proportionally to weight and verifies the net
// property exhaustively before returning, so callers always get a real net.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "slidecam/exact.hpp"
#include "slidecam/hitset.hpp"
#include "slidecam/pixelation.hpp"

namespace slidecam {

inline constexpr double kDefaultNetConstant = 4.0;
inline constexpr double kDefaultRoundConstant = 4.0;
inline constexpr std::size_t kNetAttempts = 50;

struct NetRequest {
  double r = 1.0;
  std::uint64_t seed = 0;
  std::size_t size_budget = 0;
};

// ceil(c0 * r * ln(max(2, set_count)))
std::size_t net_budget(double r, std::size_t set_count, double net_constant = kDefaultNetConstant);

double set_weight(const HittingInstance& inst, std::size_t set);
double total_weight(const HittingInstance& inst);
bool is_heavy(const HittingInstance& inst, std::size_t set, double r);

// Sets of weight >= W/r that `net` (elements) misses.
std::vector<std::size_t> missed_heavy_sets(const HittingInstance& inst, const std::vector<std::size_t>& net, double r);

struct NetResult {
  SolveStatus status = SolveStatus::kOk;
  std::vector<std::size_t> net;  // sorted elements
  std::size_t attempts = 0;
  bool ok() const { return status == SolveStatus::kOk; }
};

NetResult find_net(const HittingInstance& inst, const NetRequest& request);

// T_H united with T_V, each a (1/2r)-net of the single-orientation subinstance.
// request.size_budget is ignored; each half gets net_budget(2r, sets, c0).
NetResult combined_net(const Pixelation& pix, const HittingInstance& inst, const NetRequest& request,
                       double net_constant = kDefaultNetConstant);

struct BgOptions {
  std::uint64_t seed = 0;
  double net_constant = kDefaultNetConstant;
  double round_constant = kDefaultRoundConstant;
};

struct ApproxReport {
  SolveResult result;
  std::vector<std::size_t> guesses;    // every k tried, in order
  std::size_t iterations = 0;          // reweighting rounds over all guesses
  std::vector<std::size_t> net_sizes;  // per round
  std::size_t final_guess = 0;
  std::size_t final_budget = 0;
  // net_budget(4k) / k for the terminating guess k
  double ratio_bound = 0.0;
};

// Rounds allowed per guess before k is doubled: ceil(c * k * log2(max(2, |U|/k))).
std::size_t round_cutoff(std::size_t k, std::size_t universe, double round_constant);

ApproxReport bg_hitting_set(const HittingInstance& inst, const BgOptions& options = {});

}  // namespace slidecam
