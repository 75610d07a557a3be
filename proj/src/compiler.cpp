// SPDX-License-Identifier: Apache-2.0
#include "paulic/compiler.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "paulic/errors.hpp"
#include "paulic/peephole.hpp"

namespace paulic {

Mode mode_from_string(const std::string& s) {
  if (s == "tetris") return Mode::Tetris;
  if (s == "max_cancel") return Mode::MaxCancel;
  if (s == "naive_chain") return Mode::NaiveChain;
  throw ParseError("unknown mode \"" + s +
                   "\" (expected tetris, max_cancel or naive_chain)");
}

std::string mode_to_string(Mode m) {
  switch (m) {
    case Mode::Tetris: return "tetris";
    case Mode::MaxCancel: return "max_cancel";
    case Mode::NaiveChain: return "naive_chain";
  }
  return "?";
}

namespace {

int first_block(const Kernel& kernel) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(kernel.blocks.size()); ++i)
    if (active_length(kernel.blocks[static_cast<std::size_t>(i)]) >
        active_length(kernel.blocks[static_cast<std::size_t>(best)]))
      best = i;
  return best;
}

/// Root pairs of upcoming two-qubit blocks, in input order; feeds the
/// SWAP-vs-bridge lookahead.
std::vector<std::pair<int, int>> lookahead_pairs(
    const Kernel& kernel, const std::vector<int>& remaining, int skip,
    int limit) {
  std::vector<std::pair<int, int>> pairs;
  for (int b : remaining) {
    if (b == skip) continue;
    const Block& blk = kernel.blocks[static_cast<std::size_t>(b)];
    if (blk.root_set.size() == 2 && blk.leaf_set.empty()) {
      auto it = blk.root_set.begin();
      int a = *it++;
      pairs.emplace_back(a, *it);
      if (static_cast<int>(pairs.size()) >= limit) break;
    }
  }
  return pairs;
}

CompileResult finish(CompileResult result, const CompileOptions& opts) {
  CancelResult canceled = cancel(result.pre_cancel);
  result.routed = std::move(canceled.circuit);
  result.decomposed = decompose_swaps(result.routed);
  result.canceled_cnots = canceled.canceled_cnots;
  result.canceled_1q = canceled.canceled_1q;
  result.logical_cnots_before = result.pre_cancel.cnot_count();
  result.swap_count = result.pre_cancel.swap_count();
  result.metrics =
      make_report(result.routed, result.canceled_cnots,
                  result.logical_cnots_before, result.swap_count,
                  opts.duration_model, opts.noise);
  return result;
}

CompileResult compile_max_cancel(const Kernel& kernel,
                                 const CompileOptions& opts) {
  CompileResult result;
  result.pre_cancel.n_qubits = kernel.n_qubits;
  std::vector<int> remaining(kernel.blocks.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  int cur = first_block(kernel);
  while (!remaining.empty()) {
    std::erase(remaining, cur);
    result.block_order.push_back(cur);
    result.pre_cancel.append(
        synthesize_max_cancel(kernel.blocks[static_cast<std::size_t>(cur)],
                              kernel.n_qubits)
            .gates);
    if (remaining.empty()) break;
    // Pure greedy by similarity to the block just placed.
    int next = remaining.front();
    double best = -1.0;
    for (int b : remaining) {
      double s = similarity(kernel.blocks[static_cast<std::size_t>(cur)],
                            kernel.blocks[static_cast<std::size_t>(b)]);
      if (s > best) {
        best = s;
        next = b;
      }
    }
    cur = next;
  }
  result.initial_log2phys.resize(static_cast<std::size_t>(kernel.n_qubits));
  std::iota(result.initial_log2phys.begin(), result.initial_log2phys.end(), 0);
  result.final_log2phys = result.initial_log2phys;
  return finish(std::move(result), opts);
}

}  // namespace

CompileResult compile_kernel(const Kernel& kernel, const CouplingGraph& g,
                             const CompileOptions& opts) {
  if (kernel.blocks.empty())
    throw SynthesisError("kernel contains no blocks");
  Kernel built = kernel;
  build_ir(built);

  if (opts.mode == Mode::MaxCancel) return compile_max_cancel(built, opts);

  Mapping mapping =
      opts.initial_mapping
          ? Mapping::from_vector(*opts.initial_mapping, g.n)
          : Mapping::identity_bfs(g, built.n_qubits);

  CompileResult result;
  result.initial_log2phys = mapping.log2phys();
  result.pre_cancel.n_qubits = g.n;

  std::vector<int> remaining(built.blocks.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  int cur = opts.mode == Mode::Tetris ? first_block(built) : 0;
  while (true) {
    std::erase(remaining, cur);
    result.block_order.push_back(cur);
    const Block& block = built.blocks[static_cast<std::size_t>(cur)];
    BlockSynthesis synth =
        opts.mode == Mode::Tetris
            ? synthesize_block(g, mapping, block, opts.synth,
                               lookahead_pairs(built, remaining, -1,
                                               opts.sched.top_k))
            : synthesize_naive_chain(g, mapping, block);
    result.pre_cancel.append(synth.gates);
    result.bridge_count += synth.bridges;
    if (remaining.empty()) break;
    if (opts.mode == Mode::Tetris) {
      std::vector<const Block*> candidates;
      candidates.reserve(remaining.size());
      for (int b : remaining)
        candidates.push_back(&built.blocks[static_cast<std::size_t>(b)]);
      cur = remaining[static_cast<std::size_t>(
          pick_next(g, mapping, block, candidates, opts.sched))];
    } else {
      cur = remaining.front();
    }
  }

  result.final_log2phys = mapping.log2phys();
  return finish(std::move(result), opts);
}

}  // namespace paulic
