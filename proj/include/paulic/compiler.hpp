// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/metrics.hpp"
#include "paulic/pauli.hpp"
#include "paulic/sched.hpp"
#include "paulic/synth.hpp"
#include "paulic/topology.hpp"

namespace paulic {

enum class Mode { Tetris, MaxCancel, NaiveChain };

Mode mode_from_string(const std::string& s);
std::string mode_to_string(Mode m);

struct CompileOptions {
  Mode mode = Mode::Tetris;
  SynthConfig synth;
  SchedConfig sched;
  // Explicit placement (logical -> physical); default is the BFS layout.
  std::optional<std::vector<int>> initial_mapping;
  DurationModel duration_model;
  NoiseParams noise;
};

struct CompileResult {
  Circuit pre_cancel;  // routed, SWAPs intact, before the peephole
  Circuit routed;      // after cancellation, SWAPs intact
  Circuit decomposed;  // SWAPs expanded to CNOT triples
  std::vector<int> block_order;
  std::vector<int> initial_log2phys;
  std::vector<int> final_log2phys;
  int swap_count = 0;
  int bridge_count = 0;
  int canceled_cnots = 0;
  int canceled_1q = 0;
  int logical_cnots_before = 0;  // pre-cancel CNOT-kind count
  MetricsReport metrics;
};

/// Schedules, synthesizes, routes, cancels and measures a kernel.
/// mode max_cancel ignores the topology and compiles at the logical level.
CompileResult compile_kernel(const Kernel& kernel, const CouplingGraph& g,
                             const CompileOptions& opts = {});

}  // namespace paulic
