// SPDX-License-Identifier: Apache-2.0
#include "paulic/peephole.hpp"

#include <deque>
#include <vector>

namespace paulic {

namespace {

/// Doubly linked per-qubit wire chains over the gate list; slot 0 is the
/// gate's q0 wire, slot 1 its q1 wire (two-qubit gates only).
struct Netlist {
  struct Links {
    int prev[2] = {-1, -1};
    int next[2] = {-1, -1};
  };
  const Circuit* circ;
  std::vector<Links> links;
  std::vector<char> alive;

  explicit Netlist(const Circuit& c) : circ(&c) {
    links.resize(c.gates.size());
    alive.assign(c.gates.size(), 1);
    std::vector<std::pair<int, int>> last(
        static_cast<std::size_t>(c.n_qubits), {-1, -1});  // (gate, slot)
    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
      const Gate& g = c.gates[static_cast<std::size_t>(i)];
      int wires = g.is_two_qubit() ? 2 : 1;
      for (int s = 0; s < wires; ++s) {
        int q = s == 0 ? g.q0 : g.q1;
        auto [pg, ps] = last[static_cast<std::size_t>(q)];
        links[static_cast<std::size_t>(i)].prev[s] = pg;
        if (pg >= 0) links[static_cast<std::size_t>(pg)].next[ps] = i;
        last[static_cast<std::size_t>(q)] = {i, s};
      }
    }
  }

  int slot_of(int gate, int qubit) const {
    const Gate& g = circ->gates[static_cast<std::size_t>(gate)];
    return (g.is_two_qubit() && g.q1 == qubit) ? 1 : 0;
  }

  void unlink(int i) {
    const Gate& g = circ->gates[static_cast<std::size_t>(i)];
    int wires = g.is_two_qubit() ? 2 : 1;
    for (int s = 0; s < wires; ++s) {
      int p = links[static_cast<std::size_t>(i)].prev[s];
      int n = links[static_cast<std::size_t>(i)].next[s];
      int q = s == 0 ? g.q0 : g.q1;
      if (p >= 0) links[static_cast<std::size_t>(p)].next[slot_of(p, q)] = n;
      if (n >= 0) links[static_cast<std::size_t>(n)].prev[slot_of(n, q)] = p;
    }
    alive[static_cast<std::size_t>(i)] = 0;
  }
};

bool same_constant_negated(const std::vector<AngleTerm>& a,
                           const std::vector<AngleTerm>& b) {
  std::vector<AngleTerm> merged(a);
  merged.insert(merged.end(), b.begin(), b.end());
  return normalize_angle(std::move(merged)).empty();
}

}  // namespace

CancelResult cancel(const Circuit& circ) {
  Netlist net(circ);
  std::vector<Gate> merged = circ.gates;  // RZ angles may be rewritten
  CancelResult result;

  std::deque<int> work;
  for (int i = 0; i < static_cast<int>(circ.gates.size()); ++i) work.push_back(i);
  std::vector<char> queued(circ.gates.size(), 1);

  auto enqueue = [&](int i) {
    if (i >= 0 && net.alive[static_cast<std::size_t>(i)] &&
        !queued[static_cast<std::size_t>(i)]) {
      queued[static_cast<std::size_t>(i)] = 1;
      work.push_back(i);
    }
  };

  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    queued[static_cast<std::size_t>(i)] = 0;
    if (!net.alive[static_cast<std::size_t>(i)]) continue;
    const Gate& g = merged[static_cast<std::size_t>(i)];
    if (g.kind == GateKind::SWAP || g.kind == GateKind::RESET) continue;

    int j = net.links[static_cast<std::size_t>(i)].next[0];
    if (j < 0) continue;
    if (g.is_two_qubit() &&
        net.links[static_cast<std::size_t>(i)].next[1] != j)
      continue;
    const Gate& h = merged[static_cast<std::size_t>(j)];
    if (h.kind != g.kind || h.q0 != g.q0 || h.q1 != g.q1) continue;

    bool remove_both = false;
    bool merge_rz = false;
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::CNOT:
        remove_both = true;
        break;
      case GateKind::RX:
        remove_both = same_constant_negated(g.angle, h.angle);
        break;
      case GateKind::RZ:
        merge_rz = true;
        break;
      default:
        break;
    }
    if (!remove_both && !merge_rz) continue;

    // Wake the wire neighbors before the links disappear.
    std::vector<int> wake;
    for (int s = 0; s < (g.is_two_qubit() ? 2 : 1); ++s) {
      wake.push_back(net.links[static_cast<std::size_t>(i)].prev[s]);
      wake.push_back(net.links[static_cast<std::size_t>(j)].next[s]);
    }

    if (merge_rz) {
      std::vector<AngleTerm> sum(g.angle);
      sum.insert(sum.end(), h.angle.begin(), h.angle.end());
      sum = normalize_angle(std::move(sum));
      net.unlink(j);
      if (sum.empty()) {
        net.unlink(i);
        result.canceled_1q += 2;
      } else {
        merged[static_cast<std::size_t>(i)].angle = std::move(sum);
        result.canceled_1q += 1;
        enqueue(i);
      }
    } else {
      net.unlink(j);
      net.unlink(i);
      if (g.kind == GateKind::CNOT)
        result.canceled_cnots += 2;
      else
        result.canceled_1q += 2;
    }
    for (int w : wake) enqueue(w);
  }

  result.circuit.n_qubits = circ.n_qubits;
  for (std::size_t i = 0; i < merged.size(); ++i)
    if (net.alive[i]) result.circuit.push(merged[i]);
  return result;
}

std::optional<double> gate_cancellation_ratio(const Circuit& before,
                                              int canceled_cnots) {
  int denom = before.cnot_count();
  if (denom == 0) return std::nullopt;
  return static_cast<double>(canceled_cnots) / denom;
}

}  // namespace paulic
