// SPDX-License-Identifier: Apache-2.0
#include "paulic/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace paulic {

int depth(const Circuit& circ) {
  Circuit dec = decompose_swaps(circ);
  std::vector<int> layer(static_cast<std::size_t>(dec.n_qubits), 0);
  int total = 0;
  for (const Gate& g : dec.gates) {
    int at = layer[static_cast<std::size_t>(g.q0)];
    if (g.is_two_qubit())
      at = std::max(at, layer[static_cast<std::size_t>(g.q1)]);
    ++at;
    layer[static_cast<std::size_t>(g.q0)] = at;
    if (g.is_two_qubit()) layer[static_cast<std::size_t>(g.q1)] = at;
    total = std::max(total, at);
  }
  return total;
}

double duration(const Circuit& circ, const DurationModel& model) {
  Circuit dec = decompose_swaps(circ);
  std::vector<double> ready(static_cast<std::size_t>(dec.n_qubits), 0.0);
  double makespan = 0.0;
  for (const Gate& g : dec.gates) {
    double start = ready[static_cast<std::size_t>(g.q0)];
    if (g.is_two_qubit())
      start = std::max(start, ready[static_cast<std::size_t>(g.q1)]);
    double end =
        start + (g.kind == GateKind::CNOT ? model.cnot : model.one_qubit);
    ready[static_cast<std::size_t>(g.q0)] = end;
    if (g.is_two_qubit()) ready[static_cast<std::size_t>(g.q1)] = end;
    makespan = std::max(makespan, end);
  }
  return makespan;
}

double fidelity_proxy(const Circuit& circ, const NoiseParams& noise) {
  Circuit dec = decompose_swaps(circ);
  return std::pow(1.0 - noise.p_2q, dec.two_qubit_count()) *
         std::pow(1.0 - noise.p_1q, dec.one_qubit_count());
}

MetricsReport make_report(const Circuit& circ, int canceled_cnots,
                          int logical_before_cnots, int swap_count,
                          const DurationModel& model,
                          const NoiseParams& noise) {
  Circuit dec = decompose_swaps(circ);
  MetricsReport r;
  r.cnot_count = dec.cnot_count();
  r.total_gate_count = static_cast<int>(dec.gates.size());
  r.depth = depth(circ);
  r.duration = duration(circ, model);
  if (logical_before_cnots > 0)
    r.gcr = static_cast<double>(canceled_cnots) / logical_before_cnots;
  r.fidelity_proxy = fidelity_proxy(circ, noise);
  r.swap_induced_cnots = 3 * swap_count;
  return r;
}

std::string MetricsReport::to_text() const {
  std::ostringstream out;
  out << "cnot_count " << cnot_count << "\n"
      << "total_gate_count " << total_gate_count << "\n"
      << "depth " << depth << "\n"
      << "duration " << duration << "\n"
      << "gcr " << (gcr ? std::to_string(*gcr) : std::string("n/a")) << "\n"
      << "fidelity_proxy " << fidelity_proxy << "\n"
      << "swap_induced_cnots " << swap_induced_cnots << "\n";
  return out.str();
}

std::string MetricsReport::to_json() const {
  nlohmann::json j{{"cnot_count", cnot_count},
                   {"total_gate_count", total_gate_count},
                   {"depth", depth},
                   {"duration", duration},
                   {"fidelity_proxy", fidelity_proxy},
                   {"swap_induced_cnots", swap_induced_cnots}};
  if (gcr) j["gcr"] = *gcr;
  return j.dump(2);
}

}  // namespace paulic
