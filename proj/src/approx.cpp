#include "slidecam/approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace slidecam {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix(a ^ splitmix(b)); }

bool net_hits(const std::vector<char>& in_net, const std::vector<std::size_t>& set) {
  return std::any_of(set.begin(), set.end(), [&](std::size_t e) { return in_net[e] != 0; });
}

}  // namespace

std::size_t net_budget(double r, std::size_t set_count, double net_constant) {
  const double logm = std::log(static_cast<double>(std::max<std::size_t>(2, set_count)));
  return static_cast<std::size_t>(std::ceil(net_constant * r * logm));
}

double set_weight(const HittingInstance& inst, std::size_t set) {
  double w = 0.0;
  for (std::size_t e : inst.sets[set]) w += inst.weights[e];
  return w;
}

double total_weight(const HittingInstance& inst) {
  double w = 0.0;
  for (double x : inst.weights) w += x;
  return w;
}

bool is_heavy(const HittingInstance& inst, std::size_t set, double r) {
  const double total = total_weight(inst);
  return total > 0.0 && set_weight(inst, set) * r >= total;
}

std::vector<std::size_t> missed_heavy_sets(const HittingInstance& inst, const std::vector<std::size_t>& net, double r) {
  std::vector<char> in_net(inst.universe.size(), 0);
  for (std::size_t e : net) in_net.at(e) = 1;
  const double total = total_weight(inst);
  std::vector<std::size_t> missed;
  if (total <= 0.0) return missed;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (set_weight(inst, i) * r >= total && !net_hits(in_net, inst.sets[i])) missed.push_back(i);
  }
  return missed;
}

NetResult find_net(const HittingInstance& inst, const NetRequest& request) {
  if (request.r < 1.0) throw std::invalid_argument("net parameter r must be >= 1");
  NetResult result;
  if (inst.universe.empty()) {
    result.status = missed_heavy_sets(inst, {}, request.r).empty() ? SolveStatus::kOk : SolveStatus::kBudgetInsufficient;
    return result;
  }
  std::discrete_distribution<std::size_t> pick(inst.weights.begin(), inst.weights.end());
  for (std::size_t attempt = 0; attempt < kNetAttempts; ++attempt) {
    ++result.attempts;
    std::mt19937_64 rng(mix(request.seed, attempt));
    std::vector<char> in_net(inst.universe.size(), 0);
    for (std::size_t draw = 0; draw < request.size_budget; ++draw) in_net[pick(rng)] = 1;
    std::vector<std::size_t> net;
    for (std::size_t e = 0; e < in_net.size(); ++e) {
      if (in_net[e]) net.push_back(e);
    }
    if (missed_heavy_sets(inst, net, request.r).empty()) {
      // Drop samples that no heavy set depends on, latest first.
      for (std::size_t i = net.size(); i-- > 0;) {
        std::vector<std::size_t> trial = net;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (missed_heavy_sets(inst, trial, request.r).empty()) net = std::move(trial);
      }
      result.net = std::move(net);
      return result;
    }
  }
  result.status = SolveStatus::kBudgetInsufficient;
  return result;
}

NetResult combined_net(const Pixelation& pix, const HittingInstance& inst, const NetRequest& request,
                       double net_constant) {
  std::vector<std::size_t> horizontal;
  std::vector<std::size_t> vertical;
  for (std::size_t e = 0; e < inst.universe.size(); ++e) {
    (pix.guards.at(inst.universe[e]).orientation == Orientation::kHorizontal ? horizontal : vertical).push_back(e);
  }
  const double half_r = 2.0 * request.r;
  const std::size_t budget = net_budget(half_r, inst.sets.size(), net_constant);
  NetResult combined;
  std::size_t salt = 0;
  for (const auto* part : {&horizontal, &vertical}) {
    ++salt;
    const HittingInstance sub = restrict_universe(inst, *part);
    NetResult half = find_net(sub, {half_r, mix(request.seed, salt), budget});
    combined.attempts += half.attempts;
    if (!half.ok()) {
      combined.status = half.status;
      return combined;
    }
    for (std::size_t local : half.net) combined.net.push_back((*part)[local]);
  }
  std::sort(combined.net.begin(), combined.net.end());
  return combined;
}

std::size_t round_cutoff(std::size_t k, std::size_t universe, double round_constant) {
  const double ratio = std::max(2.0, static_cast<double>(universe) / static_cast<double>(k));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(round_constant * static_cast<double>(k) * std::log2(ratio))));
}

ApproxReport bg_hitting_set(const HittingInstance& inst, const BgOptions& options) {
  ApproxReport report;
  report.result.solution.method = "bg";
  if (!inst.feasible()) {
    report.result.status = SolveStatus::kInfeasible;
    report.result.message = "no candidate hits cross " + std::to_string(inst.cross_ids.at(inst.empty_sets().front()));
    return report;
  }
  const std::size_t m = inst.sets.size();
  if (m == 0) return report;

  HittingInstance work = inst;
  for (std::size_t k = 1;; k *= 2) {
    report.guesses.push_back(k);
    std::fill(work.weights.begin(), work.weights.end(), 1.0);
    const double r = 2.0 * static_cast<double>(k);
    const std::size_t budget = net_budget(r, m, options.net_constant);
    const std::size_t cutoff = round_cutoff(k, work.universe.size(), options.round_constant);
    for (std::size_t round = 0; round < cutoff; ++round) {
      ++report.iterations;
      const NetResult net = find_net(work, {r, mix(mix(options.seed, k), round), budget});
      if (!net.ok()) {
        report.result.status = net.status;
        report.result.message = "net finder exhausted its attempts at r=" + std::to_string(r);
        return report;
      }
      report.net_sizes.push_back(net.net.size());
      std::vector<char> in_net(work.universe.size(), 0);
      for (std::size_t e : net.net) in_net[e] = 1;
      std::size_t unhit = npos;
      for (std::size_t i = 0; i < m && unhit == npos; ++i) {
        if (!net_hits(in_net, work.sets[i])) unhit = i;
      }
      if (unhit == npos) {
        report.result.solution.guards = work.to_guard_ids(net.net);
        report.final_guess = k;
        report.final_budget = budget;
        report.ratio_bound = static_cast<double>(net_budget(4.0 * static_cast<double>(k), m, options.net_constant)) /
                             static_cast<double>(k);
        return report;
      }
      if (is_heavy(work, unhit, r)) throw std::logic_error("verified net missed a heavy set");
      for (std::size_t e : work.sets[unhit]) work.weights[e] *= 2.0;
    }
  }
}

}  // namespace slidecam
