// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "paulic/circuit.hpp"

namespace paulic {

struct DurationModel {
  double one_qubit = 1.0;
  double cnot = 10.0;
};

/// Depolarizing-channel strengths (per-gate error probabilities).
struct NoiseParams {
  double p_2q = 1e-3;
  double p_1q = 1e-4;
};

struct MetricsReport {
  int cnot_count = 0;
  int total_gate_count = 0;
  int depth = 0;
  double duration = 0.0;
  std::optional<double> gcr;
  double fidelity_proxy = 1.0;
  int swap_induced_cnots = 0;

  std::string to_text() const;  // flat key/value record
  std::string to_json() const;
};

/// Longest dependency chain after SWAP -> 3 CNOT decomposition; every
/// gate occupies one layer on each of its qubits.
int depth(const Circuit& circ);

/// ASAP-schedule makespan under the model (SWAPs decomposed first).
double duration(const Circuit& circ, const DurationModel& model = {});

/// (1 - p_2q)^#2Q * (1 - p_1q)^#1Q on the decomposed circuit.
double fidelity_proxy(const Circuit& circ, const NoiseParams& noise = {});

/// Full report for a routed circuit. `logical_before_cnots` and
/// `canceled_cnots` feed the cancellation ratio; `swap_count` fixes the
/// SWAP-induced CNOT split.
MetricsReport make_report(const Circuit& circ, int canceled_cnots,
                          int logical_before_cnots, int swap_count,
                          const DurationModel& model = {},
                          const NoiseParams& noise = {});

}  // namespace paulic
