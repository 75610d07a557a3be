// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "paulic/pauli.hpp"
#include "paulic/topology.hpp"

namespace paulic {

struct SchedConfig {
  int top_k = 10;  // candidate window ranked by similarity
};

/// Leaf-set similarity of two built blocks: |C| / (|L1| + |L2| - |C|)
/// where C is the set of qubits carried in both leaf sets with the same
/// operator. Zero when both leaf sets are empty.
double similarity(const Block& a, const Block& b);

/// Index (into `order`-relative candidate list) of the next block: among
/// the top-k candidates by similarity to `last`, the one with the lowest
/// SWAP-cost estimate sum(max(0, dist_to_center - 1)) over its root
/// qubits under the current mapping. Ties prefer higher similarity, then
/// earlier input position.
int pick_next(const CouplingGraph& g, const Mapping& mapping,
              const Block& last, const std::vector<const Block*>& candidates,
              const SchedConfig& cfg);

}  // namespace paulic
