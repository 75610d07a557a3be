// SPDX-License-Identifier: Apache-2.0
#include "paulic/sched.hpp"

#include <algorithm>
#include <tuple>

#include "paulic/errors.hpp"

namespace paulic {

double similarity(const Block& a, const Block& b) {
  int common = 0;
  for (int q : a.leaf_set)
    if (b.leaf_set.count(q) && leaf_op(a, q) == leaf_op(b, q)) ++common;
  int denom = static_cast<int>(a.leaf_set.size()) +
              static_cast<int>(b.leaf_set.size()) - common;
  return denom == 0 ? 0.0 : static_cast<double>(common) / denom;
}

namespace {

/// Estimated SWAP cost of clustering the block's roots under the current
/// mapping: each root pays its distance to the 1-median center minus the
/// one free adjacency hop.
long swap_cost_estimate(const CouplingGraph& g, const Mapping& mapping,
                        const Block& block) {
  std::vector<int> roots(block.root_set.begin(), block.root_set.end());
  if (roots.empty()) {
    if (block.leaf_set.empty()) return 0;
    roots.push_back(*block.leaf_set.begin());
  }
  auto [center, paths] = find_center(g, mapping, roots);
  (void)paths;
  std::vector<int> dist = bfs_distances(g, center);
  long cost = 0;
  for (int r : roots) cost += std::max(0, dist[mapping.phys_of(r)] - 1);
  return cost;
}

}  // namespace

int pick_next(const CouplingGraph& g, const Mapping& mapping,
              const Block& last, const std::vector<const Block*>& candidates,
              const SchedConfig& cfg) {
  if (candidates.empty())
    throw SynthesisError("pick_next called with no candidates");

  std::vector<std::pair<double, int>> ranked;  // (similarity, input index)
  ranked.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    ranked.emplace_back(similarity(last, *candidates[i]), static_cast<int>(i));
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::size_t window = std::min<std::size_t>(
      ranked.size(), static_cast<std::size_t>(std::max(1, cfg.top_k)));

  int best = -1;
  long best_cost = 0;
  double best_sim = 0.0;
  for (std::size_t i = 0; i < window; ++i) {
    auto [sim, idx] = ranked[i];
    long cost = swap_cost_estimate(g, mapping, *candidates[idx]);
    if (best < 0 ||
        std::tuple(cost, -sim, idx) < std::tuple(best_cost, -best_sim, best)) {
      best = idx;
      best_cost = cost;
      best_sim = sim;
    }
  }
  return best;
}

}  // namespace paulic
