// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/pauli.hpp"
#include "paulic/topology.hpp"

namespace paulic {

struct SynthConfig {
  double swap_weight = 3.0;  // w; one SWAP costs three CNOTs
  bool bridging = true;
  int max_verify_qubits = 12;
};

/// Attachment cost of moving an unplaced leaf qubit next to a placed
/// qubit at filtered distance d: (d-1)*w plus 2*num_strings when the
/// parent is a root-tree qubit (its CNOTs never cancel), else 2.
double score(int dist, bool parent_is_root, int num_strings, double w);

/// Directed tree over placed qubits; edges become CNOTs cascading parity
/// into the root, which receives the RZ rotation. Ancilla pseudo-nodes
/// (ids >= n_logical) stand for |0> bridge qubits and act as Z operators
/// in every string.
struct SynthesisTree {
  struct Node {
    int phys = -1;
    int parent = -1;  // -1 for the root
    bool ancilla = false;
  };
  std::map<int, Node> nodes;
  int root = -1;
  int n_logical = 0;

  bool edge_bridged(int child) const {
    auto it = nodes.find(child);
    return it != nodes.end() && it->second.parent >= n_logical;
  }
};

struct BlockSynthesis {
  std::vector<Gate> gates;
  SynthesisTree tree;
  int swaps = 0;
  int bridges = 0;
};

/// SWAPs moving the occupant of path.front() to the node adjacent to
/// path.back(); the mapping is updated after each SWAP.
std::vector<Gate> route_swap(Mapping& mapping, const std::vector<int>& path);

/// Opening half of a fast bridge: CNOT(control,a1), chain CNOTs,
/// CNOT(ak,target). Restoration happens via the mirrored second half of
/// the Pauli gadget.
std::vector<Gate> bridge_cnot(int control, int target,
                              const std::vector<int>& ancillas);

/// Standalone bridged CNOT: open chain plus restoration CNOTs returning
/// every ancilla to |0>. Net unitary on {control,target} is CNOT when all
/// ancillas start in |0>.
std::vector<Gate> bridged_cnot_with_restore(int control, int target,
                                            const std::vector<int>& ancillas);

enum class RouteChoice { Swap, Bridge };

/// SWAP when relocating would serve >= 2 future two-qubit interactions in
/// the lookahead window; bridge otherwise. Falls back to SWAP when the
/// path interior is not a |0>-guaranteed ancilla chain.
RouteChoice choose_swap_or_bridge(
    const CouplingGraph& g, const Mapping& mapping, int qa, int qb,
    const std::vector<int>& path,
    const std::vector<std::pair<int, int>>& lookahead_pairs);

/// Algorithm: cluster root qubits around the distance-sum center via
/// SWAPs, attach leaf qubits by greedy score minimization (bridging
/// through |0> ancillas where possible), then emit one Pauli gadget per
/// string from the synthesized tree.
BlockSynthesis synthesize_block(
    const CouplingGraph& g, Mapping& mapping, const Block& block,
    const SynthConfig& cfg,
    const std::vector<std::pair<int, int>>& lookahead_pairs = {});

/// Single-leaf-tree variant: fixes one chain leaf tree (maximum
/// cancellation) and routes it on hardware, moving parents toward their
/// children.
BlockSynthesis synthesize_single_leaf(const CouplingGraph& g,
                                      Mapping& mapping, const Block& block);

/// Per-string index-ordered chain synthesis with on-demand routing; the
/// no-cancellation baseline.
BlockSynthesis synthesize_naive_chain(const CouplingGraph& g,
                                      Mapping& mapping, const Block& block);

/// Logical circuit with one chain leaf tree, ignoring coupling
/// constraints; maximizes gate cancellation.
Circuit synthesize_max_cancel(const Block& block, int n_qubits);

}  // namespace paulic
